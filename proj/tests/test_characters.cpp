#include <doctest.h>

#include <Eigen/SVD>
#include <complex>
#include <sstream>

#include "affrep/characters.hpp"
#include "affrep/pi_rep.hpp"

using namespace affrep;
using cplx = std::complex<double>;

namespace {

std::vector<FieldContext> grid_fields() {
  std::vector<FieldContext> out;
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}}) {
    out.push_back(build_field(p, n));
  }
  return out;
}

}  // namespace

TEST_CASE("additive character values at known points") {
  FieldContext gf3 = build_field(3, 1);
  // exp(2 pi i / 3) = -1/2 + sqrt(3)/2 i
  cplx w = chi(gf3, gf3.one(), gf3.one());
  CHECK(std::abs(w - cplx(-0.5, 0.86602540378443865)) < 1e-15);

  FieldContext gf4 = build_field(2, 2);
  CHECK(std::abs(chi(gf4, gf4.one(), gf4.from_value(2)) - cplx(-1.0, 0.0)) < 1e-15);

  for (const FieldContext& k : grid_fields()) {
    for (const FieldElement& x : k.elements()) {
      CHECK(std::abs(chi(k, k.zero(), x) - cplx(1.0, 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("chi(1,.) is nontrivial and chi_b chi_b' = chi_{b+b'}") {
  for (const FieldContext& k : grid_fields()) {
    bool nontrivial = false;
    for (const FieldElement& x : k.elements()) {
      nontrivial = nontrivial || std::abs(chi(k, k.one(), x) - cplx(1.0, 0.0)) > 0.5;
    }
    CHECK(nontrivial);
    for (const FieldElement& b : k.elements()) {
      for (const FieldElement& bp : k.elements()) {
        for (const FieldElement& x : k.elements()) {
          cplx lhs = chi(k, b, x) * chi(k, bp, x);
          cplx rhs = chi(k, k.add(b, bp), x);
          CHECK(std::abs(lhs - rhs) < 1e-12);
        }
      }
      // additivity in the argument
      for (const FieldElement& x : k.elements()) {
        for (const FieldElement& y : k.elements()) {
          CHECK(std::abs(chi(k, b, k.add(x, y)) - chi(k, b, x) * chi(k, b, y)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("the q additive characters are linearly independent") {
  for (const FieldContext& k : grid_fields()) {
    Eigen::MatrixXcd m(k.q(), k.q());
    for (int bi = 0; bi < k.q(); ++bi) {
      for (int xi = 0; xi < k.q(); ++xi) {
        m(xi, bi) = chi(k, k.elements()[bi], k.elements()[xi]);
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > 1e-8 * svd.singularValues()(0)) ++rank;
    }
    CHECK(rank == k.q());
  }
}

TEST_CASE("multiplicative characters are homomorphisms and pairwise distinct") {
  for (const FieldContext& k : grid_fields()) {
    for (int j = 0; j < k.q() - 1; ++j) {
      for (int m1 = 0; m1 < k.q() - 1; ++m1) {
        for (int m2 = 0; m2 < k.q() - 1; ++m2) {
          FieldElement x = k.generator_pow(m1);
          FieldElement y = k.generator_pow(m2);
          CHECK(std::abs(mult_character(k, j, k.mul(x, y)) -
                         mult_character(k, j, x) * mult_character(k, j, y)) < 1e-12);
        }
      }
    }
    for (int j1 = 0; j1 < k.q() - 1; ++j1) {
      for (int j2 = j1 + 1; j2 < k.q() - 1; ++j2) {
        double diff = 0.0;
        for (int m = 0; m < k.q() - 1; ++m) {
          diff = std::max(diff, std::abs(mult_character(k, j1, k.generator_pow(m)) -
                                         mult_character(k, j2, k.generator_pow(m))));
        }
        CHECK(diff > 0.5);
      }
    }
  }
}

TEST_CASE("one-dimensional representation values") {
  FieldContext gf5 = build_field(5, 1);
  AffineGroup g5(gf5);
  // sigma_1 at s(2): generator is 2, so log(2) = 1 and the value is i.
  cplx v = one_dim_rep_value(g5, 1, g5.scaling(gf5.from_value(2)));
  CHECK(std::abs(v - cplx(0.0, 1.0)) < 1e-12);

  for (const FieldContext& k : grid_fields()) {
    AffineGroup group(k);
    for (const GroupElement& g : group.enumerate_group()) {
      CHECK(std::abs(one_dim_rep_value(group, 0, g) - cplx(1.0, 0.0)) < 1e-12);
    }
    for (int j = 0; j < k.q() - 1; ++j) {
      for (const FieldElement& b : k.elements()) {
        CHECK(std::abs(one_dim_rep_value(group, j, group.iota(b)) - cplx(1.0, 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("character table orthogonality and inventory") {
  for (const FieldContext& k : grid_fields()) {
    PiRep rep(k);
    CharacterTable t = character_table(rep);
    REQUIRE(t.values.rows() == k.q());
    REQUIRE(t.values.cols() == k.q());
    CHECK(t.row_orthonormality_residual() < 1e-9);
    CHECK(t.column_orthogonality_residual() < 1e-9);
    // Trivial row is identically 1; dimensions at the identity class square-sum to |G|.
    long long dimsq = 0;
    for (int r = 0; r < k.q(); ++r) {
      CHECK(std::abs(t.values(0, r).imag()) < 1e-12);
      double d0 = t.values(r, 0).real();
      dimsq += static_cast<long long>(d0 + 0.5) * static_cast<long long>(d0 + 0.5);
    }
    CHECK(dimsq == static_cast<long long>(k.q()) * (k.q() - 1));
    for (int c = 0; c < k.q(); ++c) {
      CHECK(std::abs(t.values(0, c) - cplx(1.0, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("character table of the smallest fields") {
  FieldContext gf3 = build_field(3, 1);
  PiRep rep3(gf3);
  CharacterTable t3 = character_table(rep3);
  // Classes in order: identity, translations, the a=2 scaling class.
  REQUIRE(t3.class_sizes == std::vector<int>{1, 2, 3});
  CHECK(std::abs(t3.values(2, 0) - cplx(2.0, 0.0)) < 1e-12);   // pi at e
  CHECK(std::abs(t3.values(2, 1) - cplx(-1.0, 0.0)) < 1e-12);  // pi at translations
  CHECK(std::abs(t3.values(2, 2)) < 1e-12);                    // pi at a=2

  FieldContext gf2 = build_field(2, 1);
  CharacterTable t2 = character_table(PiRep(gf2));
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      CHECK(std::abs(std::abs(t2.values(r, c).real()) - 1.0) < 1e-12);
      CHECK(std::abs(t2.values(r, c).imag()) < 1e-12);
    }
  }
}

TEST_CASE("csv rendering") {
  FieldContext k = build_field(3, 1);
  PiRep rep(k);
  std::string csv = character_table_csv(rep.group(), character_table(rep));
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 4);  // header + 3 irreducibles
  CHECK(lines[0].rfind("irrep,", 0) == 0);
  CHECK(lines[1].rfind("sigma_0,", 0) == 0);
  CHECK(lines[3].rfind("pi,", 0) == 0);
  CHECK(lines[3].find("2+0i") != std::string::npos);  // pi at the identity class
}
