#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "affrep/affine_group.hpp"

namespace affrep {

class PiRep;

// exp(2*pi*i * num/den). The angle is reduced exactly as a rational number
// before evaluation, so repeated character products accumulate no phase error.
std::complex<double> unit_phase(long long num, long long den);

// Additive character chi_b(x) = exp(2*pi*i * Tr(b x)/p). chi(0, .) is the
// trivial character; chi(b, .) with b != 0 is nontrivial since Tr is onto Z_p.
std::complex<double> chi(const FieldContext& k, const FieldElement& b, const FieldElement& x);

// Multiplicative character sigma_j(generator^m) = exp(2*pi*i * j m/(q-1)).
std::complex<double> mult_character(const FieldContext& k, int j, const FieldElement& x);

// Value of the j-th one-dimensional representation sigma_j . proj at g.
std::complex<double> one_dim_rep_value(const AffineGroup& group, int j, const GroupElement& g);

// Full character table of G: q-1 one-dimensional rows followed by the row
// of the (q-1)-dimensional representation, one column per conjugacy class.
struct CharacterTable {
  std::vector<GroupElement> class_reps;   // least member of each class
  std::vector<int> class_sizes;
  std::vector<std::string> row_labels;    // sigma_0 .. sigma_{q-2}, pi
  Eigen::MatrixXcd values;                // q x q

  // max |<row_i, row_j> - delta_ij| under the class-weighted inner product
  double row_orthonormality_residual() const;
  // max deviation of column sums from the second orthogonality relation
  double column_orthogonality_residual() const;
};

CharacterTable character_table(const PiRep& rep);

// CSV rendering: header row of class-representative labels "(a,b)" (canonical
// integer encodings), then one row per irreducible with cells "re+imi".
std::string character_table_csv(const AffineGroup& group, const CharacterTable& table);

}  // namespace affrep
