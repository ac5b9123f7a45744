#pragma once

#include <vector>

#include "affrep/errors.hpp"

namespace affrep {

// Element of GF(p^n) in the power basis modulo the field's modulus
// polynomial: coeffs[i] is the coefficient of x^i, each in {0,...,p-1}.
struct FieldElement {
  std::vector<int> coeffs;

  bool operator==(const FieldElement&) const = default;
};

// A concrete realization of k = GF(p^n).
//
// Construction fixes, deterministically:
//   * the modulus: lexicographically least monic irreducible polynomial of
//     degree n over Z_p (coefficients compared constant-term-first; for
//     n = 1 the modulus is x and arithmetic is plain mod-p),
//   * the generator: least element of multiplicative order q-1 in
//     coefficient-enumeration order,
//   * the element enumeration: 0 first, then generator^0, ..., generator^{q-2}.
// The enumeration is the indexing contract for every matrix downstream.
//
// Immutable after construction; all operations are pure and thread-safe.
class FieldContext {
 public:
  static constexpr long long kDefaultMaxQ = 256;

  FieldContext(int p, int n, long long max_q = kDefaultMaxQ);

  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }

  // Monic modulus polynomial, constant term first, length n+1.
  const std::vector<int>& modulus() const { return modulus_; }
  const FieldElement& generator() const { return elements_[gen_index_]; }
  const std::vector<FieldElement>& elements() const { return elements_; }

  FieldElement zero() const;
  FieldElement one() const;

  // Canonical integer encoding sum coeffs[i] * p^i, in [0, q).
  int value(const FieldElement& x) const;
  FieldElement from_value(int v) const;

  // Index of x in elements(): 0 for zero, 1 + log(x) otherwise.
  int element_index(const FieldElement& x) const;

  // Discrete log base generator, in {0,...,q-2}. Undefined on 0.
  int log(const FieldElement& x) const;
  FieldElement generator_pow(int m) const;

  bool is_zero(const FieldElement& x) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement inv(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, long long e) const;

  // Tr(x) = x + x^p + ... + x^{p^(n-1)}, returned as an integer in Z_p.
  int trace(const FieldElement& x) const;

 private:
  void validate(const FieldElement& x) const;

  int p_ = 0;
  int n_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  int gen_index_ = 0;
  std::vector<FieldElement> elements_;
  std::vector<int> exp_value_;       // m -> value of generator^m
  std::vector<int> log_of_value_;    // value -> m, -1 for zero
  std::vector<int> index_of_value_;  // value -> index in elements_
  std::vector<int> trace_of_value_;  // value -> Tr, in Z_p
};

FieldContext build_field(int p, int n, long long max_q = FieldContext::kDefaultMaxQ);

}  // namespace affrep
