#include "affrep/finite_field.hpp"

#include <algorithm>

namespace affrep {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Polynomials over Z_p as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return trim(out);
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  a = trim(a);
  while (a.size() >= b.size()) {
    int lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    a = trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& f, int p) { return poly_mod(f, d, p).empty(); }

// The v-th monic polynomial of degree deg in constant-term-first
// lexicographic order: the constant coefficient is the most significant
// base-p digit of v.
Poly monic_from_value(long long v, int deg, int p) {
  Poly f(deg + 1, 0);
  for (int i = deg - 1; i >= 0; --i) {
    f[i] = static_cast<int>(v % p);
    v /= p;
  }
  f[deg] = 1;
  return f;
}

bool is_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      if (divides(monic_from_value(v, d, p), f, p)) return false;
    }
  }
  return true;
}

Poly least_monic_irreducible(int p, int n) {
  if (n == 1) return {0, 1};  // x: arithmetic reduces to integers mod p
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (long long v = 0; v < count; ++v) {
    Poly f = monic_from_value(v, n, p);
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found (unreachable)");
}

}  // namespace

FieldContext::FieldContext(int p, int n, long long max_q) {
  if (!is_prime(p)) throw NonPrimeError(p);
  if (n < 1) throw ConfigError("field degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > max_q) throw UnsupportedSizeError(q, max_q);
  }
  p_ = p;
  n_ = n;
  q_ = static_cast<int>(q);
  modulus_ = least_monic_irreducible(p, n);

  // Construction-time arithmetic: direct polynomial products mod modulus.
  // The padded length-n form is the FieldElement representation.
  auto to_elem = [&](const Poly& f) {
    FieldElement e;
    e.coeffs.assign(n_, 0);
    for (std::size_t i = 0; i < f.size(); ++i) e.coeffs[static_cast<int>(i)] = f[i];
    return e;
  };
  auto raw_value = [&](const FieldElement& x) {
    int v = 0;
    for (int i = n_ - 1; i >= 0; --i) v = v * p_ + x.coeffs[i];
    return v;
  };
  auto raw_mul = [&](const FieldElement& x, const FieldElement& y) {
    return to_elem(poly_mod(poly_mul(trim(x.coeffs), trim(y.coeffs), p_), modulus_, p_));
  };

  FieldElement zero_elem = to_elem({});
  FieldElement one_elem = to_elem({1});

  auto mult_order = [&](const FieldElement& x) {
    FieldElement acc = x;
    int m = 1;
    while (!(acc == one_elem)) {
      acc = raw_mul(acc, x);
      ++m;
      if (m > q_) return -1;  // not a unit (cannot happen for x != 0)
    }
    return m;
  };

  // Least element of order q-1, in the same constant-term-first
  // coefficient order used for the modulus.
  FieldElement gen;
  bool found = false;
  for (int v = 1; v < q_ && !found; ++v) {
    FieldElement cand;
    cand.coeffs.assign(n_, 0);
    int t = v;
    for (int i = n_ - 1; i >= 0; --i) {
      cand.coeffs[i] = t % p_;
      t /= p_;
    }
    if (mult_order(cand) == q_ - 1) {
      gen = cand;
      found = true;
    }
  }
  if (!found) throw Error("no primitive element found (unreachable)");

  elements_.clear();
  elements_.push_back(zero_elem);
  exp_value_.assign(q_ - 1, 0);
  log_of_value_.assign(q_, -1);
  index_of_value_.assign(q_, -1);
  index_of_value_[0] = 0;

  FieldElement pw = one_elem;
  for (int m = 0; m < q_ - 1; ++m) {
    int v = raw_value(pw);
    exp_value_[m] = v;
    log_of_value_[v] = m;
    index_of_value_[v] = static_cast<int>(elements_.size());
    elements_.push_back(pw);
    pw = raw_mul(pw, gen);
  }
  gen_index_ = index_of_value_[raw_value(gen)];

  trace_of_value_.assign(q_, 0);
  for (int v = 0; v < q_; ++v) {
    FieldElement x = elements_[index_of_value_[v]];
    FieldElement acc = zero_elem;
    FieldElement term = x;
    for (int i = 0; i < n_; ++i) {
      for (int c = 0; c < n_; ++c) acc.coeffs[c] = (acc.coeffs[c] + term.coeffs[c]) % p_;
      FieldElement next = term;
      for (int rep = 1; rep < p_; ++rep) next = raw_mul(next, term);
      term = next;  // term^p
    }
    for (int c = 1; c < n_; ++c) {
      if (acc.coeffs[c] != 0) throw Error("trace left the prime field (unreachable)");
    }
    trace_of_value_[v] = acc.coeffs[0];
  }
}

void FieldContext::validate(const FieldElement& x) const {
  if (static_cast<int>(x.coeffs.size()) != n_) throw ContextMismatchError();
  for (int c : x.coeffs) {
    if (c < 0 || c >= p_) throw ContextMismatchError();
  }
}

FieldElement FieldContext::zero() const { return elements_[0]; }

FieldElement FieldContext::one() const { return elements_[1]; }

int FieldContext::value(const FieldElement& x) const {
  validate(x);
  int v = 0;
  for (int i = n_ - 1; i >= 0; --i) v = v * p_ + x.coeffs[i];
  return v;
}

FieldElement FieldContext::from_value(int v) const {
  if (v < 0 || v >= q_) throw ContextMismatchError();
  return elements_[index_of_value_[v]];
}

int FieldContext::element_index(const FieldElement& x) const { return index_of_value_[value(x)]; }

int FieldContext::log(const FieldElement& x) const {
  int v = value(x);
  if (v == 0) throw DivisionByZeroError();
  return log_of_value_[v];
}

FieldElement FieldContext::generator_pow(int m) const {
  int r = m % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return elements_[index_of_value_[exp_value_[r]]];
}

bool FieldContext::is_zero(const FieldElement& x) const { return value(x) == 0; }

FieldElement FieldContext::add(const FieldElement& x, const FieldElement& y) const {
  validate(x);
  validate(y);
  FieldElement out;
  out.coeffs.resize(n_);
  for (int i = 0; i < n_; ++i) out.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % p_;
  return out;
}

FieldElement FieldContext::neg(const FieldElement& x) const {
  validate(x);
  FieldElement out;
  out.coeffs.resize(n_);
  for (int i = 0; i < n_; ++i) out.coeffs[i] = (p_ - x.coeffs[i]) % p_;
  return out;
}

FieldElement FieldContext::sub(const FieldElement& x, const FieldElement& y) const {
  return add(x, neg(y));
}

FieldElement FieldContext::mul(const FieldElement& x, const FieldElement& y) const {
  int vx = value(x);
  int vy = value(y);
  if (vx == 0 || vy == 0) return elements_[0];
  int m = (log_of_value_[vx] + log_of_value_[vy]) % (q_ - 1);
  return elements_[index_of_value_[exp_value_[m]]];
}

FieldElement FieldContext::inv(const FieldElement& x) const {
  int vx = value(x);
  if (vx == 0) throw DivisionByZeroError();
  int m = (q_ - 1 - log_of_value_[vx]) % (q_ - 1);
  return elements_[index_of_value_[exp_value_[m]]];
}

FieldElement FieldContext::pow(const FieldElement& x, long long e) const {
  int vx = value(x);
  if (vx == 0) {
    if (e < 0) throw DivisionByZeroError();
    return e == 0 ? one() : zero();
  }
  long long m = (static_cast<long long>(log_of_value_[vx]) * e) % (q_ - 1);
  if (m < 0) m += q_ - 1;
  return elements_[index_of_value_[exp_value_[m]]];
}

int FieldContext::trace(const FieldElement& x) const { return trace_of_value_[value(x)]; }

FieldContext build_field(int p, int n, long long max_q) { return FieldContext(p, n, max_q); }

}  // namespace affrep
