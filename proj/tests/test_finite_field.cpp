#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "affrep/finite_field.hpp"

using namespace affrep;

namespace {

// Test-side polynomial arithmetic over Z_p, independent of the library's
// construction path. Coefficients constant-term-first.
std::vector<int> oracle_poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// All monic polynomials of the given degree, sorted constant-term-first
// (vector comparison is lexicographic from index 0, which is that order).
std::vector<std::vector<int>> all_monic(int deg, int p) {
  std::vector<std::vector<int>> out;
  long long count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (long long v = 0; v < count; ++v) {
    std::vector<int> f(deg + 1, 0);
    long long t = v;
    for (int i = 0; i < deg; ++i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    f[deg] = 1;
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A monic polynomial is reducible iff it equals a product of two monic
// polynomials of lower degree; exhaustive check.
bool oracle_irreducible(const std::vector<int>& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d1 = 1; d1 < deg; ++d1) {
    int d2 = deg - d1;
    if (d1 > d2) break;
    for (const auto& a : all_monic(d1, p)) {
      for (const auto& b : all_monic(d2, p)) {
        if (oracle_poly_mul(a, b, p) == f) return false;
      }
    }
  }
  return true;
}

std::vector<int> oracle_least_irreducible(int p, int n) {
  for (const auto& f : all_monic(n, p)) {
    if (oracle_irreducible(f, p)) return f;
  }
  return {};
}

int mult_order(const FieldContext& k, const FieldElement& x) {
  FieldElement acc = x;
  int m = 1;
  while (!(acc == k.one())) {
    acc = k.mul(acc, x);
    ++m;
    REQUIRE(m <= k.q());
  }
  return m;
}

}  // namespace

TEST_CASE("modulus is the lexicographically least monic irreducible") {
  // Frozen values first computed with the oracle below.
  CHECK(build_field(2, 2).modulus() == std::vector<int>{1, 1, 1});    // x^2+x+1
  CHECK(build_field(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});  // x^3+x^2+1
  CHECK(build_field(3, 2).modulus() == std::vector<int>{1, 0, 1});    // x^2+1
  CHECK(build_field(2, 4).modulus() == std::vector<int>{1, 0, 0, 1, 1});
  CHECK(build_field(5, 2).modulus() == std::vector<int>{1, 1, 1});

  for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {2, 5}, {3, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    FieldContext k = build_field(p, n);
    CHECK(k.modulus() == oracle_least_irreducible(p, n));
    CHECK(oracle_irreducible(k.modulus(), p));
  }
}

TEST_CASE("degree-1 modulus is x and arithmetic is plain mod p") {
  FieldContext k = build_field(7, 1);
  CHECK(k.modulus() == std::vector<int>{0, 1});
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      CHECK(k.value(k.add(k.from_value(a), k.from_value(b))) == (a + b) % 7);
      CHECK(k.value(k.mul(k.from_value(a), k.from_value(b))) == (a * b) % 7);
    }
    CHECK(k.value(k.neg(k.from_value(a))) == (7 - a) % 7);
  }
}

TEST_CASE("generator is the least primitive element") {
  CHECK(build_field(5, 1).generator() == build_field(5, 1).from_value(2));
  CHECK(build_field(2, 1).generator() == build_field(2, 1).from_value(1));
  CHECK(build_field(7, 1).generator() == build_field(7, 1).from_value(3));
  CHECK(build_field(3, 2).generator() == build_field(3, 2).from_value(4));  // x+1

  for (auto [p, n] : {std::pair{2, 2}, {3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}}) {
    CAPTURE(p);
    CAPTURE(n);
    FieldContext k = build_field(p, n);
    CHECK(mult_order(k, k.generator()) == k.q() - 1);
    // Nothing before it in constant-term-first coefficient order has full order.
    std::vector<std::vector<int>> tuples;
    for (int v = 1; v < k.q(); ++v) tuples.push_back(k.from_value(v).coeffs);
    std::sort(tuples.begin(), tuples.end());
    for (const auto& coeffs : tuples) {
      FieldElement x{coeffs};
      if (x == k.generator()) break;
      CHECK(mult_order(k, x) < k.q() - 1);
    }
  }
}

TEST_CASE("element enumeration starts at zero then follows generator powers") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 4}}) {
    FieldContext k = build_field(p, n);
    REQUIRE(static_cast<int>(k.elements().size()) == k.q());
    CHECK(k.elements()[0] == k.zero());
    CHECK(k.elements()[1] == k.one());
    std::set<int> seen;
    for (int m = 0; m < k.q() - 1; ++m) {
      FieldElement g = k.generator_pow(m);
      CHECK(k.elements()[1 + m] == g);
      CHECK(k.log(g) == m);
      seen.insert(k.value(g));
    }
    CHECK(static_cast<int>(seen.size()) == k.q() - 1);  // powers enumerate k^x
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (auto [p, n] :
       {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    CAPTURE(p);
    CAPTURE(n);
    FieldContext k = build_field(p, n);
    const auto& els = k.elements();
    for (const auto& x : els) {
      CHECK(k.add(x, k.zero()) == x);
      CHECK(k.mul(x, k.one()) == x);
      CHECK(k.is_zero(k.add(x, k.neg(x))));
      if (!k.is_zero(x)) CHECK(k.mul(x, k.inv(x)) == k.one());
      for (const auto& y : els) {
        CHECK(k.add(x, y) == k.add(y, x));
        CHECK(k.mul(x, y) == k.mul(y, x));
        for (const auto& z : els) {
          CHECK(k.add(k.add(x, y), z) == k.add(x, k.add(y, z)));
          CHECK(k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z)));
          CHECK(k.mul(x, k.add(y, z)) == k.add(k.mul(x, y), k.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("frobenius is a field automorphism and trace is onto Z_p") {
  for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 1}}) {
    CAPTURE(p);
    CAPTURE(n);
    FieldContext k = build_field(p, n);
    std::set<int> traces;
    for (const auto& x : k.elements()) {
      traces.insert(k.trace(x));
      for (const auto& y : k.elements()) {
        CHECK(k.pow(k.add(x, y), p) == k.add(k.pow(x, p), k.pow(y, p)));
        CHECK(k.pow(k.mul(x, y), p) == k.mul(k.pow(x, p), k.pow(y, p)));
      }
      // Trace is additive and lands in the prime field.
      CHECK(k.trace(x) >= 0);
      CHECK(k.trace(x) < p);
    }
    CHECK(static_cast<int>(traces.size()) == p);
  }
}

TEST_CASE("worked arithmetic examples") {
  FieldContext gf4 = build_field(2, 2);
  // x * x reduces to x + 1 under x^2+x+1.
  CHECK(gf4.mul(gf4.from_value(2), gf4.from_value(2)) == gf4.from_value(3));
  // x + (x+1) = 1.
  CHECK(gf4.add(gf4.from_value(2), gf4.from_value(3)) == gf4.one());
  CHECK(gf4.trace(gf4.from_value(2)) == 1);
  CHECK(gf4.trace(gf4.zero()) == 0);

  FieldContext gf9 = build_field(3, 2);
  CHECK(gf9.trace(gf9.from_value(3)) == 0);  // Tr(x) = x + x^3 = 0 under x^2+1

  FieldContext gf5 = build_field(5, 1);
  CHECK(gf5.mul(gf5.from_value(2), gf5.from_value(3)) == gf5.one());

  FieldContext gf3 = build_field(3, 1);
  CHECK(gf3.add(gf3.from_value(2), gf3.from_value(2)) == gf3.one());
}

TEST_CASE("construction and argument errors") {
  CHECK_THROWS_AS(build_field(4, 1), NonPrimeError);
  CHECK_THROWS_AS(build_field(1, 1), NonPrimeError);
  CHECK_THROWS_AS(build_field(2, 9), UnsupportedSizeError);  // 512 > 256
  CHECK_THROWS_AS(build_field(3, 0), ConfigError);

  FieldContext k = build_field(2, 2);
  CHECK_THROWS_AS(k.inv(k.zero()), DivisionByZeroError);
  CHECK_THROWS_AS(k.log(k.zero()), DivisionByZeroError);

  FieldContext k8 = build_field(2, 3);
  CHECK_THROWS_AS(k8.add(k.one(), k8.one()), ContextMismatchError);  // length mismatch
  FieldElement bad{{5, 0}};
  CHECK_THROWS_AS(k.mul(bad, k.one()), ContextMismatchError);  // coefficient out of range
}

TEST_CASE("pow agrees with repeated multiplication") {
  FieldContext k = build_field(3, 2);
  for (const auto& x : k.elements()) {
    FieldElement acc = k.one();
    for (int e = 0; e <= 10; ++e) {
      CHECK(k.pow(x, e) == acc);
      acc = k.mul(acc, x);
    }
  }
}
