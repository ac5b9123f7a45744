#include "affrep/opalg.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <deque>

namespace affrep {

Eigen::VectorXcd vec(const Operator& t) {
  return Eigen::Map<const Eigen::VectorXcd>(t.data(), t.size());
}

Operator unvec(const Eigen::VectorXcd& v, int side) {
  return Eigen::Map<const Operator>(v.data(), side, side);
}

std::complex<double> hs_inner(const Operator& s, const Operator& t) {
  return (t.adjoint() * s).trace();
}

double hs_norm(const Operator& t) { return t.norm(); }

RankBasis rank_revealing_basis(const Eigen::MatrixXcd& cols) {
  RankBasis out;
  if (cols.cols() == 0) {
    out.onb.resize(cols.rows(), 0);
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  out.sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  while (rank < sv.size() && sv(rank) > kRankRelTol * out.sigma_max && sv(rank) > 0.0) ++rank;
  out.rank = rank;
  if (rank < sv.size()) out.sigma_discarded = sv(rank);
  if (rank > 0 && out.sigma_discarded > 0.0 &&
      sv(rank - 1) < kRankGapMin * out.sigma_discarded) {
    throw RankGapError("singular values " + std::to_string(sv(rank - 1)) + " vs " +
                       std::to_string(out.sigma_discarded) +
                       " do not separate signal from noise");
  }
  out.onb = svd.matrixU().leftCols(rank);
  return out;
}

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& m, double scale) {
  if (m.cols() == 0) return Eigen::MatrixXcd(0, 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  double cut = kRankRelTol * std::max(smax, scale);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  if (rank > 0 && rank < sv.size() && sv(rank) > 0.0 && sv(rank - 1) < kRankGapMin * sv(rank)) {
    throw RankGapError("null-space rank decision is not cleanly separated");
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

// --- OperatorSubspace --------------------------------------------------------

OperatorSubspace OperatorSubspace::span(int side, const std::vector<Operator>& ops) {
  OperatorSubspace out(side);
  out.basis_ = ops;
  Eigen::MatrixXcd cols(side * side, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = vec(ops[i]);
  RankBasis rb = rank_revealing_basis(cols);
  out.stacked_ = rb.onb;
  out.ortho_.reserve(rb.rank);
  for (int i = 0; i < rb.rank; ++i) out.ortho_.push_back(unvec(rb.onb.col(i), side));
  return out;
}

Operator OperatorSubspace::project(const Operator& t) const {
  if (dim() == 0) return Operator::Zero(side_, side_);
  Eigen::VectorXcd v = vec(t);
  return unvec(stacked_ * (stacked_.adjoint() * v), side_);
}

double OperatorSubspace::projection_residual(const Operator& t) const {
  double scale = hs_norm(t);
  if (scale == 0.0) return 0.0;
  return hs_norm(t - project(t)) / scale;
}

double OperatorSubspace::containment_residual(const OperatorSubspace& other) const {
  double worst = 0.0;
  for (const Operator& e : ortho_) {
    worst = std::max(worst, other.projection_residual(e));
  }
  return worst;
}

// --- SpanGrower --------------------------------------------------------------

SpanGrower::SpanGrower(int side) : side_(side) {}

bool SpanGrower::add(const Operator& t) {
  Eigen::VectorXcd v = vec(t);
  const double scale = v.norm();
  if (scale == 0.0) return false;
  // Two Gram-Schmidt passes keep the basis orthonormal to machine precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : vecs_) v -= e.dot(v) * e;
  }
  if (v.norm() <= kRankRelTol * scale) return false;
  v.normalize();
  vecs_.push_back(v);
  mats_.push_back(unvec(v, side_));
  return true;
}

OperatorSubspace SpanGrower::to_subspace() const {
  return OperatorSubspace::span(side_, mats_);
}

// --- OperatorAlgebra ---------------------------------------------------------

OperatorAlgebra::OperatorAlgebra(const PiRep& rep) : rep_(&rep) {
  const AffineGroup& g = rep.group();
  Operator us = rep.pi_matrix(g.scaling(rep.field().generator()));
  Operator ui = rep.pi_matrix(g.iota(rep.field().one()));
  conjugators_ = {us, us.adjoint(), ui, ui.adjoint()};
}

Operator OperatorAlgebra::mult_operator(const Eigen::VectorXcd& phi) const {
  if (phi.size() != side()) {
    throw LengthMismatchError("multiplier has length " + std::to_string(phi.size()) +
                              ", expected " + std::to_string(side()));
  }
  return phi.asDiagonal();
}

Operator OperatorAlgebra::matrix_unit(const FieldElement& x, const FieldElement& y) const {
  const FieldContext& k = field();
  Operator e = Operator::Zero(side(), side());
  e(k.log(x), k.log(y)) = 1.0;
  return e;
}

Eigen::VectorXcd OperatorAlgebra::chi_multiplier(const FieldElement& b_prime) const {
  const FieldContext& k = field();
  Eigen::VectorXcd phi(side());
  for (int m = 0; m < side(); ++m) phi(m) = rep_->chi(k.mul(b_prime, k.generator_pow(m)));
  return phi;
}

Operator OperatorAlgebra::kappa(const FieldElement& b_prime, const Operator& t) const {
  const FieldContext& k = field();
  const int d = side();
  Operator out(d, d);
  for (int mx = 0; mx < d; ++mx) {
    FieldElement x = k.generator_pow(mx);
    for (int my = 0; my < d; ++my) {
      FieldElement diff = k.sub(x, k.generator_pow(my));
      out(mx, my) = rep_->chi(k.mul(diff, b_prime)) * t(mx, my);
    }
  }
  return out;
}

Operator OperatorAlgebra::isotypic_project(const FieldElement& b, const Operator& t) const {
  const FieldContext& k = field();
  Operator acc = Operator::Zero(side(), side());
  for (const FieldElement& bp : k.elements()) {
    acc += std::conj(rep_->chi(k.mul(b, bp))) * kappa(bp, t);
  }
  return acc / static_cast<double>(k.q());
}

OperatorSubspace OperatorAlgebra::component_space(const FieldElement& b) const {
  const FieldContext& k = field();
  std::vector<Operator> units;
  for (int my = 0; my < side(); ++my) {
    FieldElement y = k.generator_pow(my);
    FieldElement x = k.add(y, b);
    if (!k.is_zero(x)) units.push_back(matrix_unit(x, y));
  }
  return OperatorSubspace::span(side(), units);
}

Operator OperatorAlgebra::scaling_conj(const FieldElement& a, const Operator& t) const {
  Operator p = rep_->pi_matrix(rep_->group().scaling(a));
  return p.adjoint() * t * p;
}

OperatorSubspace OperatorAlgebra::diagonal_algebra() const {
  const FieldContext& k = field();
  std::vector<Operator> units;
  for (int m = 0; m < side(); ++m) {
    FieldElement x = k.generator_pow(m);
    units.push_back(matrix_unit(x, x));
  }
  return OperatorSubspace::span(side(), units);
}

OperatorSubspace OperatorAlgebra::commutant(const OperatorSubspace& s) const {
  const int d = side();
  const int full = d * d;
  // Current candidate space, as columns over the operator space; refined by
  // one commutator constraint at a time.
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Identity(full, full);
  for (const Operator& c : s.orthonormal_basis()) {
    if (basis.cols() == 0) break;
    Eigen::MatrixXcd commutators(full, basis.cols());
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      Operator t = unvec(basis.col(j), d);
      commutators.col(j) = vec(c * t - t * c);
    }
    // Both operands are HS-normalized, so a genuine non-commutation shows up
    // at unit scale; anything near machine epsilon is the zero map.
    basis = basis * null_space(commutators, 1.0);
  }
  std::vector<Operator> ops;
  ops.reserve(basis.cols());
  for (Eigen::Index j = 0; j < basis.cols(); ++j) ops.push_back(unvec(basis.col(j), d));
  return OperatorSubspace::span(d, ops);
}

std::optional<int> OperatorAlgebra::nilpotency_index(const Operator& t) const {
  const double scale = t.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 1;
  Operator power = t;
  double scale_m = scale;
  for (int m = 1; m <= side(); ++m) {
    if (power.cwiseAbs().maxCoeff() < kNilTol * scale_m) return m;
    if (m < side()) {
      power = power * t;
      scale_m *= scale;
    }
  }
  return std::nullopt;
}

OperatorSubspace OperatorAlgebra::normalized_closure(const std::vector<Operator>& seeds) const {
  SpanGrower grower(side());
  std::deque<int> work;
  for (const Operator& s : seeds) {
    if (grower.add(s)) work.push_back(grower.dim() - 1);
  }
  while (!work.empty() && !grower.full()) {
    int i = work.front();
    work.pop_front();
    const Operator cur = grower.mats()[i];
    for (const Operator& u : conjugators_) {
      if (grower.full()) break;
      if (grower.add(u * cur * u.adjoint())) work.push_back(grower.dim() - 1);
    }
    // Pairs (i, j) with j added after i are produced when j is processed.
    const int snapshot = grower.dim();
    for (int j = 0; j < snapshot && !grower.full(); ++j) {
      const Operator other = grower.mats()[j];  // copy: adds may reallocate
      if (grower.add(cur * other)) work.push_back(grower.dim() - 1);
      if (grower.full()) break;
      if (grower.add(other * cur)) work.push_back(grower.dim() - 1);
    }
  }
  return grower.to_subspace();
}

Eigen::MatrixXcd OperatorAlgebra::joint_kernel(const OperatorSubspace& s) const {
  const int d = side();
  if (s.dim() == 0) return Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd stacked(static_cast<Eigen::Index>(s.dim()) * d, d);
  for (int i = 0; i < s.dim(); ++i) {
    stacked.middleRows(static_cast<Eigen::Index>(i) * d, d) = s.orthonormal_basis()[i];
  }
  return null_space(stacked, 1.0);
}

}  // namespace affrep
