#pragma once

#include <optional>
#include <vector>

#include "affrep/pi_rep.hpp"

namespace affrep {

// Numerical rank policy: singular values above kRankRelTol * sigma_max count
// toward rank, and any discarded singular value must sit at least kRankGapMin
// below the last accepted one. Every integer dimension read off a spectrum
// goes through this gate.
inline constexpr double kRankRelTol = 1e-8;
inline constexpr double kRankGapMin = 1e4;
inline constexpr double kNilTol = 1e-10;

Eigen::VectorXcd vec(const Operator& t);
Operator unvec(const Eigen::VectorXcd& v, int side);

// Hilbert-Schmidt inner product <S,T> = trace(T* S).
std::complex<double> hs_inner(const Operator& s, const Operator& t);
double hs_norm(const Operator& t);

struct RankBasis {
  Eigen::MatrixXcd onb;      // orthonormal columns spanning the column space
  int rank = 0;
  double sigma_max = 0.0;
  double sigma_discarded = 0.0;  // largest singular value below the cut (0 if none)
};

// Rank-revealing orthonormalization of a set of column vectors.
// Throws RankGapError when the signal/noise separation is below kRankGapMin.
RankBasis rank_revealing_basis(const Eigen::MatrixXcd& cols);

// Orthonormal basis of the null space of m (full column space when m == 0).
// scale is the natural magnitude of a genuinely nonzero entry of m; singular
// values are measured against max(sigma_max, scale) so an all-noise matrix
// is recognized as the zero map.
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& m, double scale = 0.0);

// A subspace of the (q-1)^2-dimensional operator space, carrying both the
// original spanning list and a Hilbert-Schmidt-orthonormalized basis.
class OperatorSubspace {
 public:
  explicit OperatorSubspace(int side) : side_(side) {}
  static OperatorSubspace span(int side, const std::vector<Operator>& ops);

  int side() const { return side_; }
  int dim() const { return static_cast<int>(ortho_.size()); }
  const std::vector<Operator>& basis() const { return basis_; }
  const std::vector<Operator>& orthonormal_basis() const { return ortho_; }

  Operator project(const Operator& t) const;
  // ||t - project(t)||_HS / ||t||_HS; 0 for t = 0.
  double projection_residual(const Operator& t) const;
  // max projection residual of this subspace's orthonormal basis onto other.
  double containment_residual(const OperatorSubspace& other) const;

 private:
  int side_;
  std::vector<Operator> basis_;
  std::vector<Operator> ortho_;
  Eigen::MatrixXcd stacked_;  // side^2 x dim, orthonormal columns
};

// Incremental Gram-Schmidt span builder used by closure computations.
class SpanGrower {
 public:
  explicit SpanGrower(int side);

  // Returns true when t added a new direction.
  bool add(const Operator& t);

  int side() const { return side_; }
  int dim() const { return static_cast<int>(mats_.size()); }
  bool full() const { return dim() == side_ * side_; }
  const std::vector<Operator>& mats() const { return mats_; }

  OperatorSubspace to_subspace() const;

 private:
  int side_;
  std::vector<Eigen::VectorXcd> vecs_;
  std::vector<Operator> mats_;
};

// The operator-algebra layer over a fixed representation: the diagonal
// multiplication algebra B, the kappa action by translation conjugation,
// the character grading E_b, scaling conjugation, commutants and closures.
class OperatorAlgebra {
 public:
  explicit OperatorAlgebra(const PiRep& rep);

  const PiRep& rep() const { return *rep_; }
  const FieldContext& field() const { return rep_->field(); }
  int side() const { return rep_->dim(); }

  // Diagonal operator m_phi, phi indexed by k^x in generator-power order.
  Operator mult_operator(const Eigen::VectorXcd& phi) const;

  // E_{x,y} for x, y in k^x, indexed through the discrete-log enumeration.
  Operator matrix_unit(const FieldElement& x, const FieldElement& y) const;

  // phi = chi_{b'} restricted to k^x, as a multiplier vector.
  Eigen::VectorXcd chi_multiplier(const FieldElement& b_prime) const;

  // kappa(b') T = pi(iota(b')) T pi(iota(b'))^{-1}; computed entrywise as
  // (x - y, b') phases since pi(iota(b')) is diagonal.
  Operator kappa(const FieldElement& b_prime, const Operator& t) const;

  // Averaging projector onto the chi_b-isotypic component.
  Operator isotypic_project(const FieldElement& b, const Operator& t) const;

  // E_b: operators supported on {(x,y) : x - y = b}; dim q-1 for b = 0,
  // q-2 otherwise.
  OperatorSubspace component_space(const FieldElement& b) const;

  // pi(scaling(a))^{-1} T pi(scaling(a)); maps E_b into E_{ab}.
  Operator scaling_conj(const FieldElement& a, const Operator& t) const;

  // The multiplication algebra B (all diagonals), with matrix-unit basis.
  OperatorSubspace diagonal_algebra() const;

  // All operators commuting with every basis element of s, computed as the
  // null space of the stacked commutator maps under the rank policy above.
  OperatorSubspace commutant(const OperatorSubspace& s) const;

  // Smallest m <= q-1 with ||T^m||_max < kNilTol * ||T||_max^m, else nullopt.
  std::optional<int> nilpotency_index(const Operator& t) const;

  // Smallest subspace containing the seeds closed under basis products and
  // under conjugation by pi(scaling(generator)), pi(iota(1)) and inverses.
  OperatorSubspace normalized_closure(const std::vector<Operator>& seeds) const;

  // Orthonormal basis (columns) of {F in H : T F = 0 for all T in s}.
  Eigen::MatrixXcd joint_kernel(const OperatorSubspace& s) const;

  // The four closure conjugators: pi(s(gen)), pi(iota(1)) and inverses.
  const std::vector<Operator>& conjugators() const { return conjugators_; }

 private:
  const PiRep* rep_;
  std::vector<Operator> conjugators_;
};

}  // namespace affrep
