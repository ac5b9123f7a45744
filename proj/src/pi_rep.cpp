#include "affrep/pi_rep.hpp"

#include "affrep/characters.hpp"

namespace affrep {

PiRep::PiRep(const FieldContext& field, FieldElement chi_param)
    : k_(&field), group_(field), chi_param_(std::move(chi_param)) {
  if (k_->is_zero(chi_param_)) {
    throw ConfigError("chi parameter must be nonzero (the character must be nontrivial)");
  }
}

PiRep::PiRep(const FieldContext& field) : PiRep(field, field.one()) {}

std::complex<double> PiRep::chi(const FieldElement& x) const {
  return affrep::chi(*k_, chi_param_, x);
}

Operator PiRep::pi_matrix(const GroupElement& g) const {
  const int d = dim();
  // g = iota(b) scaling(a) with a = g.a, b = g.b; the factorization is unique.
  const int loga = k_->log(g.a);
  Operator m = Operator::Zero(d, d);
  for (int mx = 0; mx < d; ++mx) {
    const int my = (mx + loga) % d;
    m(mx, my) = chi(k_->mul(k_->generator_pow(mx), g.b));
  }
  return m;
}

std::complex<double> PiRep::pi_character(const GroupElement& g) const {
  return pi_matrix(g).trace();
}

std::complex<double> PiRep::induced_character_value(const GroupElement& g) const {
  std::complex<double> sum{0.0, 0.0};
  for (int m = 0; m < dim(); ++m) {
    GroupElement s = group_.scaling(k_->generator_pow(m));
    GroupElement conj = group_.compose(s, group_.compose(g, group_.inverse(s)));
    if (conj.a == k_->one()) sum += chi(conj.b);  // conj lies in the translation subgroup
  }
  return sum;
}

double PiRep::verify_irreducible() const {
  double sum = 0.0;
  for (const GroupElement& g : group_.enumerate_group()) {
    sum += std::norm(pi_character(g));
  }
  return std::abs(sum / group_.order() - 1.0);
}

}  // namespace affrep
