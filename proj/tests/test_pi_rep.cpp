#include <doctest.h>

#include <complex>

#include "affrep/pi_rep.hpp"

using namespace affrep;
using cplx = std::complex<double>;

namespace {

double max_abs(const Operator& t) { return t.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("pi at the identity is the identity matrix") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    FieldContext k = build_field(p, n);
    PiRep rep(k);
    Operator m = rep.pi_matrix(rep.group().identity());
    CHECK(max_abs(m - Operator::Identity(rep.dim(), rep.dim())) < 1e-15);
  }
}

TEST_CASE("pi of a pure scaling is a 0/1 permutation matrix") {
  for (auto [p, n] : {std::pair{5, 1}, {2, 2}, {2, 3}}) {
    FieldContext k = build_field(p, n);
    PiRep rep(k);
    for (int m = 0; m < k.q() - 1; ++m) {
      Operator mat = rep.pi_matrix(rep.group().scaling(k.generator_pow(m)));
      for (int i = 0; i < rep.dim(); ++i) {
        int ones = 0;
        for (int j = 0; j < rep.dim(); ++j) {
          cplx v = mat(i, j);
          bool zero = std::abs(v) < 1e-15;
          bool one = std::abs(v - cplx(1.0, 0.0)) < 1e-15;
          CHECK((zero || one));
          if (one) ++ones;
        }
        CHECK(ones == 1);
      }
    }
  }
}

TEST_CASE("pi of a translation is the expected diagonal") {
  FieldContext k = build_field(3, 1);
  PiRep rep(k);
  Operator m = rep.pi_matrix(rep.group().iota(k.one()));
  // Basis order (1, 2): entries chi(1) = exp(2 pi i/3), chi(2) = exp(4 pi i/3).
  CHECK(std::abs(m(0, 0) - cplx(-0.5, 0.86602540378443865)) < 1e-15);
  CHECK(std::abs(m(1, 1) - cplx(-0.5, -0.86602540378443865)) < 1e-15);
  CHECK(std::abs(m(0, 1)) < 1e-15);
  CHECK(std::abs(m(1, 0)) < 1e-15);
}

TEST_CASE("pi is a unitary homomorphism") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    CAPTURE(p);
    CAPTURE(n);
    FieldContext k = build_field(p, n);
    PiRep rep(k);
    const AffineGroup& group = rep.group();
    auto all = group.enumerate_group();
    Operator eye = Operator::Identity(rep.dim(), rep.dim());
    for (const GroupElement& g : all) {
      Operator pg = rep.pi_matrix(g);
      CHECK(max_abs(pg * pg.adjoint() - eye) < 1e-9);
      for (const GroupElement& h : all) {
        CHECK(max_abs(rep.pi_matrix(group.compose(g, h)) - pg * rep.pi_matrix(h)) < 1e-9);
      }
    }
  }
}

TEST_CASE("character values in closed form") {
  for (auto [p, n] : {std::pair{3, 1}, {2, 2}, {5, 1}, {2, 3}}) {
    FieldContext k = build_field(p, n);
    PiRep rep(k);
    const AffineGroup& group = rep.group();
    CHECK(std::abs(rep.pi_character(group.identity()) - cplx(k.q() - 1, 0.0)) < 1e-12);
    for (const GroupElement& g : group.enumerate_group()) {
      if (g == group.identity()) continue;
      if (group.proj(g) == k.one()) {
        // Nonzero translation: the full character sum minus the zero term.
        CHECK(std::abs(rep.pi_character(g) - cplx(-1.0, 0.0)) < 1e-12);
      } else {
        // Fixed-point-free permutation part: zero diagonal.
        CHECK(std::abs(rep.pi_character(g)) < 1e-12);
      }
    }
  }
}

TEST_CASE("induced character formula matches the explicit model pointwise") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
    CAPTURE(p);
    CAPTURE(n);
    FieldContext k = build_field(p, n);
    PiRep rep(k);
    const AffineGroup& group = rep.group();
    CHECK(std::abs(rep.induced_character_value(group.identity()) - cplx(k.q() - 1, 0.0)) <
          1e-9);
    for (const GroupElement& g : group.enumerate_group()) {
      CHECK(std::abs(rep.induced_character_value(g) - rep.pi_character(g)) < 1e-9);
    }
  }
}

TEST_CASE("the representation is irreducible") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 3}, {3, 2}}) {
    FieldContext k = build_field(p, n);
    CHECK(PiRep(k).verify_irreducible() < 1e-9);
  }
}

TEST_CASE("a trivial character parameter is rejected") {
  FieldContext k = build_field(3, 1);
  CHECK_THROWS_AS(PiRep(k, k.zero()), ConfigError);
}

TEST_CASE("any nonzero character parameter gives a valid model") {
  FieldContext k = build_field(2, 2);
  for (int c = 1; c < k.q(); ++c) {
    PiRep rep(k, k.from_value(c));
    const AffineGroup& group = rep.group();
    CHECK(rep.verify_irreducible() < 1e-9);
    for (const GroupElement& g : group.enumerate_group()) {
      CHECK(std::abs(rep.induced_character_value(g) - rep.pi_character(g)) < 1e-9);
    }
  }
}
