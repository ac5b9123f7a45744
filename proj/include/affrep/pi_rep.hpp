#pragma once

#include <Eigen/Dense>
#include <complex>

#include "affrep/affine_group.hpp"

namespace affrep {

// A (q-1)x(q-1) complex matrix acting on H = functions on k^x. Row/column
// index m stands for the delta function at generator^m; operators act on
// column vectors, and entry (x, y) is the coefficient of input coordinate y
// in output coordinate x.
using Operator = Eigen::MatrixXcd;

// The (q-1)-dimensional irreducible unitary representation of G, realized
// on H with (pi(g)F)(x) = chi(x b) F(x a) for g = iota(b) scaling(a).
//
// The character parameter c selects the nontrivial additive character
// chi(c, .) the model is built from; any c != 0 gives a unitarily
// equivalent representation (the verifier re-runs key checks under a
// second choice to confirm nothing depends on it).
class PiRep {
 public:
  explicit PiRep(const FieldContext& field, FieldElement chi_param);
  PiRep(const FieldContext& field);  // canonical choice c = 1

  const FieldContext& field() const { return *k_; }
  const AffineGroup& group() const { return group_; }
  const FieldElement& chi_param() const { return chi_param_; }
  int dim() const { return k_->q() - 1; }

  // The chosen additive character chi(c, .).
  std::complex<double> chi(const FieldElement& x) const;

  Operator pi_matrix(const GroupElement& g) const;
  std::complex<double> pi_character(const GroupElement& g) const;

  // Character of Ind over the coset representatives {scaling(a)}, computed
  // group-theoretically; an independent cross-check of the explicit model.
  std::complex<double> induced_character_value(const GroupElement& g) const;

  // |<chi_pi, chi_pi> - 1| under the |G|-normalized character inner product.
  double verify_irreducible() const;

 private:
  const FieldContext* k_;
  AffineGroup group_;
  FieldElement chi_param_;
};

}  // namespace affrep
