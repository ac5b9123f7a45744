#include "affrep/verifier.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "affrep/rng.hpp"

namespace affrep {

namespace {

// Stream ids keep every randomized check on its own derived sequence.
constexpr std::uint64_t kStreamHom = 1;
constexpr std::uint64_t kStreamIsotypic = 2;
constexpr std::uint64_t kStreamKappa = 3;
constexpr std::uint64_t kStreamGrading = 4;
constexpr std::uint64_t kStreamScaling = 5;
constexpr std::uint64_t kStreamNilFamily = 6;
constexpr std::uint64_t kStreamGradeOne = 7;
constexpr std::uint64_t kStreamFalsify = 8;
constexpr std::uint64_t kStreamDiagClosure = 9;
constexpr std::uint64_t kStreamNilProbe = 10;
constexpr std::uint64_t kStreamSimDiag = 11;

std::uint64_t stream_id(std::uint64_t tag, std::uint64_t trial) { return (tag << 32) | trial; }

double max_abs(const Operator& t) { return t.size() == 0 ? 0.0 : t.cwiseAbs().maxCoeff(); }

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void finish(CheckRecord& rec, const Stopwatch& sw) {
  rec.millis = sw.millis();
  if (!std::isfinite(rec.residual)) {
    rec.residual = std::numeric_limits<double>::max();
    rec.pass = false;
  }
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

Verifier::Verifier(const FieldContext& field, const FieldElement& chi_param, std::uint64_t seed)
    : k_(&field),
      rep_(field, chi_param),
      alg_(rep_),
      seed_(seed),
      group_elements_(rep_.group().enumerate_group()),
      diag_(alg_.diagonal_algebra()) {
  const int d = rep_.dim();
  // Cache the full matrix family only while it stays small; checks fall back
  // to on-demand construction above the cap.
  if (static_cast<long long>(group_elements_.size()) * d * d <= (1 << 22)) {
    pi_cache_.reserve(group_elements_.size());
    for (const GroupElement& g : group_elements_) pi_cache_.push_back(rep_.pi_matrix(g));
  }
  components_.reserve(k_->q());
  for (const FieldElement& b : k_->elements()) components_.push_back(alg_.component_space(b));
}

const Operator& Verifier::pi_of(int group_index) {
  if (!pi_cache_.empty()) return pi_cache_[group_index];
  static thread_local Operator scratch;
  scratch = rep_.pi_matrix(group_elements_[group_index]);
  return scratch;
}

Operator Verifier::random_operator(RngStream& rng) const {
  const int d = rep_.dim();
  Operator t(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) t(i, j) = rng.next_complex_normal();
  }
  return t;
}

Operator Verifier::random_in_component(RngStream& rng, const FieldElement& b) const {
  const OperatorSubspace& e = components_[k_->element_index(b)];
  Operator t = Operator::Zero(rep_.dim(), rep_.dim());
  for (const Operator& unit : e.basis()) t += rng.next_complex_normal() * unit;
  return t;
}

CheckRecord Verifier::verify_rep_inventory() {
  Stopwatch sw;
  CheckRecord rec{.name = "rep_inventory",
                  .anchor = "q-1 one-dimensional irreducibles plus one of dimension q-1; "
                            "squared dimensions sum to |G|"};
  const long long q = k_->q();
  const bool identity = (q - 1) + (q - 1) * (q - 1) == q * (q - 1);
  CharacterTable table = character_table(rep_);
  const bool square = table.values.rows() == table.values.cols() && table.values.rows() == q;
  rec.residual =
      std::max(table.row_orthonormality_residual(), table.column_orthogonality_residual());
  rec.dim = table.values.rows();
  rec.pass = identity && square && rec.residual < 1e-9;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_rep_homomorphism() {
  Stopwatch sw;
  CheckRecord rec{.name = "rep_homomorphism", .anchor = "pi(gh) = pi(g) pi(h) on G x G"};
  const AffineGroup& group = rep_.group();
  const int order = group.order();
  double worst = 0.0;
  if (k_->q() <= 8) {
    for (int i = 0; i < order; ++i) {
      Operator gi = pi_of(i);
      for (int j = 0; j < order; ++j) {
        GroupElement gh = group.compose(group_elements_[i], group_elements_[j]);
        worst = std::max(worst, max_abs(rep_.pi_matrix(gh) - gi * pi_of(j)));
      }
    }
  } else {
    RngStream rng = RngStream::derive(seed_, stream_id(kStreamHom, 0));
    for (int t = 0; t < 10000; ++t) {
      int i = static_cast<int>(rng.next_below(order));
      int j = static_cast<int>(rng.next_below(order));
      GroupElement gh = group.compose(group_elements_[i], group_elements_[j]);
      Operator lhs = rep_.pi_matrix(gh);
      Operator gi = pi_of(i);  // copy: pi_of may reuse scratch storage
      worst = std::max(worst, max_abs(lhs - gi * pi_of(j)));
    }
  }
  rec.residual = worst;
  rec.pass = worst < 1e-9;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_rep_unitarity() {
  Stopwatch sw;
  CheckRecord rec{.name = "rep_unitarity", .anchor = "pi(g) pi(g)* = identity for every g"};
  const int d = rep_.dim();
  Operator eye = Operator::Identity(d, d);
  double worst = 0.0;
  for (std::size_t i = 0; i < group_elements_.size(); ++i) {
    const Operator& p = pi_of(static_cast<int>(i));
    worst = std::max(worst, max_abs(p * p.adjoint() - eye));
  }
  rec.residual = worst;
  rec.pass = worst < 1e-9;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_rep_irreducible() {
  Stopwatch sw;
  CheckRecord rec{.name = "rep_irreducible",
                  .anchor = "character self-inner-product equals 1 over |G|"};
  rec.residual = rep_.verify_irreducible();
  rec.pass = rec.residual < 1e-9;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_induced_character_match() {
  Stopwatch sw;
  CheckRecord rec{.name = "induced_character_match",
                  .anchor = "coset-sum character of the induced model matches the trace of "
                            "the explicit matrices pointwise"};
  double worst = 0.0;
  for (const GroupElement& g : group_elements_) {
    worst = std::max(worst, std::abs(rep_.induced_character_value(g) - rep_.pi_character(g)));
  }
  rec.residual = worst;
  rec.pass = worst < 1e-9;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_b_inductive(const std::string& name) {
  Stopwatch sw;
  CheckRecord rec{.name = name,
                  .anchor = "conjugation by every pi(g) maps diagonal operators to diagonal "
                            "operators"};
  const int d = rep_.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < group_elements_.size(); ++i) {
    const Operator p = pi_of(static_cast<int>(i));
    for (const Operator& unit : diag_.basis()) {
      Operator conj = p * unit * p.adjoint();
      conj.diagonal().setZero();
      worst = std::max(worst, max_abs(conj));
    }
  }
  rec.residual = worst;
  rec.pass = worst < 1e-9;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_b_maximal_abelian() {
  Stopwatch sw;
  CheckRecord rec{.name = "b_maximal_abelian",
                  .anchor = "the diagonal multiplication algebra equals its own commutant"};
  OperatorSubspace c = alg_.commutant(diag_);
  rec.dim = c.dim();
  rec.residual = std::max(c.containment_residual(diag_), diag_.containment_residual(c));
  rec.pass = c.dim() == rep_.dim() && rec.residual < 1e-8;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_spanning_characters() {
  Stopwatch sw;
  CheckRecord rec{.name = "spanning_characters",
                  .anchor = "the q restricted additive characters span the q-1 dimensional "
                            "representation space"};
  const int d = rep_.dim();
  Eigen::MatrixXcd cols(d, k_->q());
  for (int i = 0; i < k_->q(); ++i) cols.col(i) = alg_.chi_multiplier(k_->elements()[i]);
  RankBasis rb = rank_revealing_basis(cols);
  rec.dim = rb.rank;
  rec.residual = rb.sigma_max > 0.0 ? rb.sigma_discarded / rb.sigma_max : 0.0;
  rec.pass = rb.rank == d;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_component_dims() {
  Stopwatch sw;
  CheckRecord rec{.name = "component_dims",
                  .anchor = "graded components have dimension q-1 at zero and q-2 elsewhere, "
                            "summing to (q-1)^2"};
  const int q = k_->q();
  long long total = 0;
  bool ok = true;
  for (int i = 0; i < q; ++i) {
    int dim = components_[i].dim();
    total += dim;
    int expected = k_->is_zero(k_->elements()[i]) ? q - 1 : q - 2;
    ok = ok && dim == expected;
  }
  ok = ok && total == static_cast<long long>(q - 1) * (q - 1);
  rec.dim = total;
  rec.residual = 0.0;
  rec.pass = ok;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_isotypic_resolution() {
  Stopwatch sw;
  CheckRecord rec{.name = "isotypic_resolution",
                  .anchor = "averaging projectors are idempotent, sum to the identity map, "
                            "and land in the stated eigenspace"};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    RngStream rng = RngStream::derive(seed_, stream_id(kStreamIsotypic, trial));
    Operator t = random_operator(rng);
    const double scale = hs_norm(t);
    Operator sum = Operator::Zero(rep_.dim(), rep_.dim());
    for (const FieldElement& b : k_->elements()) {
      Operator pb = alg_.isotypic_project(b, t);
      sum += pb;
      worst = std::max(worst, hs_norm(alg_.isotypic_project(b, pb) - pb) / scale);
      // kappa acts on the component by the character chi(b b').
      for (const FieldElement& bp : k_->elements()) {
        Operator expect = rep_.chi(k_->mul(b, bp)) * pb;
        worst = std::max(worst, hs_norm(alg_.kappa(bp, pb) - expect) / scale);
      }
    }
    worst = std::max(worst, hs_norm(sum - t) / scale);
  }
  rec.residual = worst;
  rec.pass = worst < 1e-10;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_kappa_additivity() {
  Stopwatch sw;
  CheckRecord rec{.name = "kappa_additivity",
                  .anchor = "kappa(b1) kappa(b2) = kappa(b1 + b2): conjugation by translations "
                            "is a representation of (k,+)"};
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    RngStream rng = RngStream::derive(seed_, stream_id(kStreamKappa, trial));
    Operator t = random_operator(rng);
    const double scale = max_abs(t);
    for (const FieldElement& b1 : k_->elements()) {
      for (const FieldElement& b2 : k_->elements()) {
        Operator lhs = alg_.kappa(b1, alg_.kappa(b2, t));
        Operator rhs = alg_.kappa(k_->add(b1, b2), t);
        worst = std::max(worst, max_abs(lhs - rhs) / scale);
      }
    }
  }
  rec.residual = worst;
  rec.pass = worst < 1e-12;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_grading_product() {
  Stopwatch sw;
  CheckRecord rec{.name = "grading_product",
                  .anchor = "a product of graded operators lands in the component of the sum "
                            "of the grades"};
  const int q = k_->q();
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    RngStream rng = RngStream::derive(seed_, stream_id(kStreamGrading, trial));
    FieldElement b = k_->elements()[rng.next_below(q)];
    FieldElement bp = k_->elements()[rng.next_below(q)];
    Operator t = random_in_component(rng, b);
    Operator tp = random_in_component(rng, bp);
    Operator prod = t * tp;
    const OperatorSubspace& target = components_[k_->element_index(k_->add(b, bp))];
    worst = std::max(worst, target.projection_residual(prod));
  }
  rec.residual = worst;
  rec.pass = worst < 1e-9;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_scaling_isomorphism() {
  Stopwatch sw;
  CheckRecord rec{.name = "scaling_isomorphism",
                  .anchor = "conjugation by pi(scaling(a)) carries the component at b onto "
                            "the component at ab, preserving dimension"};
  const int q = k_->q();
  double worst = 0.0;
  bool dims_ok = true;
  std::uint64_t counter = 0;
  for (int m = 0; m < q - 1; ++m) {
    FieldElement a = k_->generator_pow(m);
    for (const FieldElement& b : k_->elements()) {
      const OperatorSubspace& src = components_[k_->element_index(b)];
      const OperatorSubspace& dst = components_[k_->element_index(k_->mul(a, b))];
      dims_ok = dims_ok && src.dim() == dst.dim();
      for (const Operator& e : src.orthonormal_basis()) {
        worst = std::max(worst, dst.projection_residual(alg_.scaling_conj(a, e)));
      }
      // One random combination per pair exercises non-basis elements too.
      RngStream rng = RngStream::derive(seed_, stream_id(kStreamScaling, counter++));
      Operator t = random_in_component(rng, b);
      worst = std::max(worst, dst.projection_residual(alg_.scaling_conj(a, t)));
    }
  }
  rec.residual = worst;
  rec.pass = dims_ok && worst < 1e-9;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_nilpotent_joint_kernel() {
  Stopwatch sw;
  CheckRecord rec{.name = "nilpotent_joint_kernel",
                  .anchor = "a commuting nilpotent family annihilates a common nonzero vector; "
                            "the joint kernel of a conjugation-closed family is invariant and "
                            "therefore zero or everything"};
  const int q = k_->q();
  const int d = rep_.dim();
  double worst = 0.0;
  long long min_kernel = d;
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    RngStream rng = RngStream::derive(seed_, stream_id(kStreamNilFamily, trial));
    std::vector<Operator> family;
    bool family_zero = false;
    if (q == 2) {
      family.push_back(Operator::Zero(d, d));  // E_b is trivial for b != 0
      family_zero = true;
    } else {
      // Weighted shift along a +b translation path in k^x, cycle broken by
      // construction, then a few polynomials in it with no constant term.
      FieldElement b = k_->generator_pow(static_cast<int>(rng.next_below(q - 1)));
      FieldElement y = k_->generator_pow(static_cast<int>(rng.next_below(q - 1)));
      Operator shift = Operator::Zero(d, d);
      int links = 0;
      for (int step = 0; step + 1 < k_->p(); ++step) {
        FieldElement next = k_->add(y, b);
        if (k_->is_zero(next)) break;
        shift += std::complex<double>(rng.next_normal(), rng.next_normal()) *
                 alg_.matrix_unit(next, y);
        y = next;
        ++links;
      }
      if (links == 0) {
        family.push_back(Operator::Zero(d, d));
        family_zero = true;
      } else {
        int degree = std::min(links, 3);
        for (int member = 0; member < 3; ++member) {
          Operator acc = Operator::Zero(d, d);
          Operator power = shift;
          for (int deg = 1; deg <= degree; ++deg) {
            acc += std::complex<double>(rng.next_normal(), rng.next_normal()) * power;
            power = power * shift;
          }
          family.push_back(acc);
        }
      }
    }
    for (const Operator& member : family) {
      ok = ok && alg_.nilpotency_index(member).has_value();
    }
    OperatorSubspace fam = OperatorSubspace::span(d, family);
    Eigen::MatrixXcd kernel = alg_.joint_kernel(fam);
    min_kernel = std::min(min_kernel, static_cast<long long>(kernel.cols()));
    ok = ok && kernel.cols() > 0;

    // Close the span under the generator conjugations only, then check the
    // invariance of its joint kernel under the whole group.
    SpanGrower grower(d);
    std::vector<int> work;
    for (const Operator& member : family) {
      if (grower.add(member)) work.push_back(grower.dim() - 1);
    }
    for (std::size_t w = 0; w < work.size(); ++w) {
      const Operator cur = grower.mats()[work[w]];
      for (const Operator& u : alg_.conjugators()) {
        if (grower.add(u * cur * u.adjoint())) work.push_back(grower.dim() - 1);
      }
    }
    Eigen::MatrixXcd closed_kernel = alg_.joint_kernel(grower.to_subspace());
    const long long ck = closed_kernel.cols();
    ok = ok && (ck == 0 || ck == d);
    ok = ok && (family_zero ? ck == d : true);
    if (ck > 0 && ck < d) continue;  // already failed above; skip residual
    if (ck > 0) {
      Eigen::MatrixXcd proj = closed_kernel * closed_kernel.adjoint();
      for (std::size_t i = 0; i < group_elements_.size(); ++i) {
        Eigen::MatrixXcd moved = pi_of(static_cast<int>(i)) * closed_kernel;
        worst = std::max(worst, (moved - proj * moved).cwiseAbs().maxCoeff());
      }
    }
  }
  rec.residual = worst;
  rec.dim = min_kernel;
  rec.pass = ok && worst < 1e-8 && min_kernel >= 1;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_dim_bound_on(const OperatorSubspace& a) {
  Stopwatch sw;
  CheckRecord rec{.name = "abelian_dim_bound",
                  .anchor = "an abelian nil-free normalized algebra has dimension at most q-1 "
                            "and is simultaneously diagonalizable"};
  const int d = rep_.dim();
  const auto& basis = a.orthonormal_basis();
  // Precondition: the family commutes.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (max_abs(basis[i] * basis[j] - basis[j] * basis[i]) >= 1e-9) {
        throw NotAbelianError("dimension-bound input does not commute");
      }
    }
  }
  bool ok = a.dim() <= d;
  rec.dim = a.dim();
  if (a.dim() == 0) {
    rec.pass = ok;
    finish(rec, sw);
    return rec;
  }
  // Nil-radical-free probe: random combinations must not be nilpotent.
  RngStream probe = RngStream::derive(seed_, stream_id(kStreamNilProbe, 0));
  for (int t = 0; t < 100 && ok; ++t) {
    Operator combo = Operator::Zero(d, d);
    for (const Operator& e : basis) combo += probe.next_complex_normal() * e;
    ok = ok && !alg_.nilpotency_index(combo).has_value();
  }
  // Simultaneous diagonalization via the eigenbasis of a generic element.
  double best = std::numeric_limits<double>::max();
  RngStream rng = RngStream::derive(seed_, stream_id(kStreamSimDiag, 0));
  for (int attempt = 0; attempt < 3; ++attempt) {
    Operator combo = Operator::Zero(d, d);
    for (const Operator& e : basis) combo += rng.next_complex_normal() * e;
    Eigen::ComplexEigenSolver<Operator> eig(combo);
    if (eig.info() != Eigen::Success) continue;
    Eigen::MatrixXcd v = eig.eigenvectors();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(v);
    double residual = 0.0;
    for (const Operator& e : basis) {
      Operator conj = lu.solve(e * v);
      conj.diagonal().setZero();
      residual = std::max(residual, max_abs(conj));
    }
    best = std::min(best, residual);
    if (best < 1e-7) break;
  }
  rec.residual = best == std::numeric_limits<double>::max() ? 1.0 : best;
  rec.pass = ok && rec.residual < 1e-7;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_abelian_dim_bound(const std::vector<OperatorSubspace>& extra) {
  Stopwatch sw;
  CheckRecord rec{.name = "abelian_dim_bound",
                  .anchor = "every abelian nil-free closure found has dimension at most q-1 "
                            "and a common eigenbasis"};
  const int d = rep_.dim();
  std::vector<OperatorSubspace> inputs;
  inputs.push_back(diag_);
  inputs.push_back(OperatorSubspace::span(d, {Operator::Identity(d, d)}));
  for (int t = 0; t < 20; ++t) {
    RngStream rng = RngStream::derive(seed_, stream_id(kStreamDiagClosure, t));
    Eigen::VectorXcd phi(d);
    for (int i = 0; i < d; ++i) phi(i) = rng.next_complex_normal();
    inputs.push_back(alg_.normalized_closure({alg_.mult_operator(phi)}));
  }
  for (const OperatorSubspace& s : extra) inputs.push_back(s);

  bool ok = true;
  double worst = 0.0;
  long long max_dim = 0;
  for (const OperatorSubspace& a : inputs) {
    CheckRecord sub = verify_dim_bound_on(a);
    ok = ok && sub.pass;
    worst = std::max(worst, sub.residual);
    max_dim = std::max(max_dim, sub.dim.value_or(0));
  }
  rec.residual = worst;
  rec.dim = max_dim;
  rec.pass = ok;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_grade_one_span() {
  Stopwatch sw;
  CheckRecord rec{.name = "grade_one_span",
                  .anchor = "a non-nilpotent grade-one operator has nonzero p-th power in "
                            "grade zero and its scaling orbit spans at least q dimensions; "
                            "nilpotent grade-one operators die within p(q-1) powers"};
  const int q = k_->q();
  const int d = rep_.dim();
  const int p = k_->p();
  double min_margin = std::numeric_limits<double>::max();
  long long min_rank = std::numeric_limits<long long>::max();
  long long eligible = 0;
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    RngStream rng = RngStream::derive(seed_, stream_id(kStreamGradeOne, trial));
    Operator t = random_in_component(rng, k_->one());
    if (max_abs(t) == 0.0) continue;  // E_1 is trivial only for q = 2
    std::optional<int> idx = alg_.nilpotency_index(t);
    if (idx.has_value()) {
      ok = ok && *idx <= p * (q - 1);
      continue;
    }
    ++eligible;
    Operator tp = Operator::Identity(d, d);
    for (int i = 0; i < p; ++i) tp = tp * t;
    double scale = std::pow(max_abs(t), p);
    double margin = max_abs(components_[k_->element_index(k_->zero())].project(tp)) / scale;
    min_margin = std::min(min_margin, margin);
    ok = ok && margin > 1e-6;

    std::vector<Operator> family;
    for (int m = 0; m < q - 1; ++m) family.push_back(alg_.scaling_conj(k_->generator_pow(m), t));
    family.push_back(tp);
    Eigen::MatrixXcd cols(d * d, static_cast<Eigen::Index>(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = vec(family[i]);
    RankBasis rb = rank_revealing_basis(cols);
    min_rank = std::min(min_rank, static_cast<long long>(rb.rank));
    ok = ok && rb.rank >= q;
  }
  rec.residual = eligible > 0 ? min_margin : 0.0;
  if (eligible > 0) rec.dim = min_rank;
  rec.pass = ok;
  finish(rec, sw);
  return rec;
}

CheckRecord Verifier::verify_zero_grade_containment() {
  Stopwatch sw;
  CheckRecord rec{.name = "zero_grade_containment",
                  .anchor = "operators commuting with every character multiplier are diagonal"};
  const int d = rep_.dim();
  std::vector<Operator> gens;
  for (const FieldElement& bp : k_->elements()) {
    gens.push_back(alg_.mult_operator(alg_.chi_multiplier(bp)));
  }
  OperatorSubspace c = alg_.commutant(OperatorSubspace::span(d, gens));
  rec.dim = c.dim();
  rec.residual = c.containment_residual(diag_);
  rec.pass = c.dim() == d && rec.residual < 1e-8;
  finish(rec, sw);
  return rec;
}

Verifier::ClosureClass Verifier::classify_closure(const Operator& seed_op) const {
  const int d = rep_.dim();
  ClosureClass out{.abelian = true, .full = false, .dim = 0, .space = OperatorSubspace(d)};
  SpanGrower grower(d);
  std::vector<int> work;
  auto add = [&](const Operator& t) -> bool {
    if (!grower.add(t)) return false;
    const int newest = grower.dim() - 1;
    // A non-commuting pair stays non-commuting in the completed closure, so
    // the classification is final as soon as one appears.
    const Operator& fresh = grower.mats()[newest];
    for (int i = 0; i < newest && out.abelian; ++i) {
      if (max_abs(fresh * grower.mats()[i] - grower.mats()[i] * fresh) >= 1e-9) {
        out.abelian = false;
      }
    }
    work.push_back(newest);
    return true;
  };

  add(seed_op);
  for (std::size_t w = 0; w < work.size() && out.abelian && !grower.full(); ++w) {
    const Operator cur = grower.mats()[work[w]];
    for (const Operator& u : alg_.conjugators()) {
      if (!out.abelian || grower.full()) break;
      add(u * cur * u.adjoint());
    }
    const int snapshot = grower.dim();
    for (int j = 0; j < snapshot && out.abelian && !grower.full(); ++j) {
      const Operator other = grower.mats()[j];
      add(cur * other);
      if (out.abelian && !grower.full()) add(other * cur);
    }
  }
  out.dim = grower.dim();
  if (grower.full() && d >= 2) {
    out.full = true;
    out.abelian = false;
  }
  if (out.abelian) out.space = grower.to_subspace();
  return out;
}

CheckRecord Verifier::falsify_uniqueness(long long trials, std::uint64_t seed,
                                         std::vector<OperatorSubspace>* collected,
                                         const std::string& name) {
  Stopwatch sw;
  CheckRecord rec{.name = name,
                  .anchor = "randomized normalized closures: every abelian closure lies in the "
                            "diagonal algebra; every escape is non-abelian or has dimension "
                            ">= q"};
  if (trials < 1) throw ConfigError("falsification needs at least one trial");
  const int q = k_->q();
  double worst_contained = 0.0;
  long long abelian_count = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    RngStream rng = RngStream::derive(seed, stream_id(kStreamFalsify, trial));
    Operator t = random_operator(rng);
    if (rng.next_double() < 0.5) {
      // Bias the seed into a random graded component.
      FieldElement b = k_->elements()[rng.next_below(q)];
      const int d = rep_.dim();
      for (int mx = 0; mx < d; ++mx) {
        FieldElement x = k_->generator_pow(mx);
        for (int my = 0; my < d; ++my) {
          if (!(k_->sub(x, k_->generator_pow(my)) == b)) t(mx, my) = 0.0;
        }
      }
    }
    ClosureClass cls = classify_closure(t);
    if (!cls.abelian) continue;  // non-abelian satisfies the escape clause outright
    ++abelian_count;
    double containment = cls.space.containment_residual(diag_);
    worst_contained = std::max(worst_contained, containment);
    if (containment >= 1e-8 && cls.dim < q) {
      nlohmann::ordered_json detail;
      detail["trial"] = trial;
      detail["seed"] = seed;
      detail["q"] = q;
      detail["closure_dim"] = cls.dim;
      detail["containment_residual"] = containment;
      std::vector<std::vector<std::vector<double>>> entries;
      for (int i = 0; i < t.rows(); ++i) {
        std::vector<std::vector<double>> row;
        for (int j = 0; j < t.cols(); ++j) row.push_back({t(i, j).real(), t(i, j).imag()});
        entries.push_back(row);
      }
      detail["seed_operator"] = entries;
      throw CounterexampleFound("abelian closure escaped the diagonal algebra with dim < q",
                                detail.dump());
    }
    if (collected) collected->push_back(cls.space);
  }
  rec.residual = worst_contained;
  rec.dim = abelian_count;
  rec.pass = worst_contained < 1e-8;
  finish(rec, sw);
  return rec;
}

VerificationReport full_report(int p, int n, long long trials, std::uint64_t seed, int chi_value) {
  FieldContext field = build_field(p, n);
  if (chi_value <= 0 || chi_value >= field.q()) {
    throw ConfigError("chi parameter must encode a nonzero field element (1 <= chi < q)");
  }
  FieldElement chi_param = field.from_value(chi_value);

  VerificationReport report;
  report.p = field.p();
  report.n = field.n();
  report.q = field.q();
  report.trials = trials;
  report.rng_seed = seed;
  report.chi_parameter = chi_value;
  report.modulus = field.modulus();
  report.generator = field.generator().coeffs;

  Verifier main(field, chi_param, seed);

  CharacterTable table = character_table(main.rep());
  for (std::size_t c = 0; c < table.class_reps.size(); ++c) {
    report.character_table.class_reps.emplace_back(field.value(table.class_reps[c].a),
                                                   field.value(table.class_reps[c].b));
    report.character_table.class_sizes.push_back(table.class_sizes[c]);
  }
  report.character_table.row_labels = table.row_labels;
  for (int r = 0; r < table.values.rows(); ++r) {
    std::vector<std::complex<double>> row;
    for (int c = 0; c < table.values.cols(); ++c) row.push_back(table.values(r, c));
    report.character_table.rows.push_back(std::move(row));
  }
  std::vector<OperatorSubspace> closures;

  report.checks.push_back(main.verify_rep_inventory());
  report.checks.push_back(main.verify_rep_homomorphism());
  report.checks.push_back(main.verify_rep_unitarity());
  report.checks.push_back(main.verify_rep_irreducible());
  report.checks.push_back(main.verify_induced_character_match());
  report.checks.push_back(main.verify_b_inductive());
  report.checks.push_back(main.verify_b_maximal_abelian());
  report.checks.push_back(main.verify_spanning_characters());
  report.checks.push_back(main.verify_component_dims());
  report.checks.push_back(main.verify_isotypic_resolution());
  report.checks.push_back(main.verify_kappa_additivity());
  report.checks.push_back(main.verify_grading_product());
  report.checks.push_back(main.verify_scaling_isomorphism());
  report.checks.push_back(main.verify_nilpotent_joint_kernel());
  report.checks.push_back(main.verify_grade_one_span());
  report.checks.push_back(main.verify_zero_grade_containment());
  report.checks.push_back(main.falsify_uniqueness(trials, seed, &closures));

  if (field.q() > 2) {
    // Confirm nothing depends on which nontrivial character the model uses.
    int alt_value = chi_value == 1 ? field.value(field.generator()) : 1;
    report.alt_chi_parameter = alt_value;
    Verifier alt(field, field.from_value(alt_value), seed);
    report.checks.push_back(
        alt.falsify_uniqueness(trials, seed, &closures, "closure_falsification_alt_chi"));
    report.checks.push_back(main.verify_abelian_dim_bound(closures));
    report.checks.push_back(alt.verify_b_inductive("b_inductive_alt_chi"));
  } else {
    report.checks.push_back(main.verify_abelian_dim_bound(closures));
  }
  return report;
}

// --- serialization -----------------------------------------------------------

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["params"] = {{"p", report.p},
                 {"n", report.n},
                 {"q", report.q},
                 {"trials", report.trials},
                 {"seed", report.rng_seed},
                 {"chi", report.chi_parameter},
                 {"alt_chi", report.alt_chi_parameter
                                 ? nlohmann::ordered_json(*report.alt_chi_parameter)
                                 : nlohmann::ordered_json(nullptr)},
                 {"modulus", report.modulus},
                 {"generator", report.generator}};
  nlohmann::ordered_json table;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < report.character_table.class_reps.size(); ++c) {
    classes.push_back({{"a", report.character_table.class_reps[c].first},
                       {"b", report.character_table.class_reps[c].second},
                       {"size", report.character_table.class_sizes[c]}});
  }
  table["classes"] = classes;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < report.character_table.rows.size(); ++r) {
    nlohmann::ordered_json row;
    row["label"] = report.character_table.row_labels[r];
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (const std::complex<double>& z : report.character_table.rows[r]) {
      vals.push_back(nlohmann::ordered_json::array({z.real(), z.imag()}));
    }
    row["values"] = vals;
    rows.push_back(row);
  }
  table["rows"] = rows;
  j["params"]["character_table"] = table;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["pass"] = c.pass;
    jc["residual"] = c.residual;
    jc["dim"] = c.dim ? nlohmann::ordered_json(*c.dim) : nlohmann::ordered_json(nullptr);
    jc["millis"] = nullptr;  // wall time is not reproducible; see README
    checks.push_back(jc);
  }
  j["checks"] = checks;
  long long passed = std::count_if(report.checks.begin(), report.checks.end(),
                                   [](const CheckRecord& c) { return c.pass; });
  j["summary"] = {{"total", report.checks.size()},
                  {"passed", passed},
                  {"failed", static_cast<long long>(report.checks.size()) - passed},
                  {"all_pass", report.all_pass()}};
  return j;
}

std::string report_to_json_string(const VerificationReport& report) {
  return report_to_json(report).dump(2);
}

}  // namespace affrep
