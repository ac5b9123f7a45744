#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "affrep/characters.hpp"
#include "affrep/opalg.hpp"
#include "affrep/rng.hpp"

namespace affrep {

struct CheckRecord {
  std::string name;
  std::string anchor;  // one-line statement of the claim being checked
  bool pass = false;
  double residual = 0.0;
  std::optional<long long> dim;
  double millis = 0.0;  // wall clock; serialized as null so reports stay byte-identical
};

// Character table flattened to plain values for serialization: class
// representatives as canonical (a, b) encodings, one row per irreducible.
struct CharacterTableRecord {
  std::vector<std::pair<int, int>> class_reps;
  std::vector<int> class_sizes;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::complex<double>>> rows;
};

struct VerificationReport {
  int p = 0;
  int n = 0;
  int q = 0;
  long long trials = 0;
  std::uint64_t rng_seed = 0;
  int chi_parameter = 0;                 // canonical integer encoding
  std::optional<int> alt_chi_parameter;  // second character used for the re-runs
  std::vector<int> modulus;
  std::vector<int> generator;
  CharacterTableRecord character_table;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
};

nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_json_string(const VerificationReport& report);

// Mechanized checks over a fixed field and character choice. All randomness
// comes from per-trial streams derived from (seed, stream id), so every
// check is reproducible and independent of execution order.
class Verifier {
 public:
  Verifier(const FieldContext& field, const FieldElement& chi_param, std::uint64_t seed);

  const FieldContext& field() const { return *k_; }
  const PiRep& rep() const { return rep_; }
  const OperatorAlgebra& algebra() const { return alg_; }

  CheckRecord verify_rep_inventory();
  CheckRecord verify_rep_homomorphism();
  CheckRecord verify_rep_unitarity();
  CheckRecord verify_rep_irreducible();
  CheckRecord verify_induced_character_match();
  CheckRecord verify_b_inductive(const std::string& name = "b_inductive");
  CheckRecord verify_b_maximal_abelian();
  CheckRecord verify_spanning_characters();
  CheckRecord verify_component_dims();
  CheckRecord verify_isotypic_resolution();
  CheckRecord verify_kappa_additivity();
  CheckRecord verify_grading_product();
  CheckRecord verify_scaling_isomorphism();
  CheckRecord verify_nilpotent_joint_kernel();
  CheckRecord verify_grade_one_span();
  CheckRecord verify_zero_grade_containment();

  // dim(A) <= q-1 plus simultaneous diagonalizability for an abelian,
  // nil-radical-free subspace. Throws NotAbelianError on a non-commuting
  // input (a harness bug, not a mathematical failure).
  CheckRecord verify_dim_bound_on(const OperatorSubspace& a);

  // Aggregated bound check over the canonical inputs (diagonal algebra,
  // scalars, random diagonal closures) plus every abelian closure collected
  // by falsification runs.
  CheckRecord verify_abelian_dim_bound(const std::vector<OperatorSubspace>& extra);

  // Randomized search for a counterexample to uniqueness: random seeds,
  // normalized closure, classification. Throws CounterexampleFound if a
  // trial produces an abelian closure outside the diagonal algebra with
  // dimension below q. Abelian closures are appended to *collected.
  CheckRecord falsify_uniqueness(long long trials, std::uint64_t seed,
                                 std::vector<OperatorSubspace>* collected = nullptr,
                                 const std::string& name = "closure_falsification");

 private:
  struct ClosureClass {
    bool abelian = false;
    bool full = false;
    int dim = 0;
    OperatorSubspace space;  // meaningful only when abelian
  };

  ClosureClass classify_closure(const Operator& seed_op) const;
  Operator random_operator(RngStream& rng) const;
  Operator random_in_component(RngStream& rng, const FieldElement& b) const;
  const Operator& pi_of(int group_index);

  const FieldContext* k_;
  PiRep rep_;
  OperatorAlgebra alg_;
  std::uint64_t seed_;
  std::vector<GroupElement> group_elements_;
  std::vector<Operator> pi_cache_;  // empty when the group is too large to cache
  std::vector<OperatorSubspace> components_;  // E_b indexed by element index of b
  OperatorSubspace diag_;
};

// Runs the whole battery for GF(p^n): every check above, plus re-runs of
// the inductive-conjugation check and the falsification harness under a
// second character parameter (q > 2) to confirm nothing depends on the
// choice. Aggregates into a VerificationReport.
VerificationReport full_report(int p, int n, long long trials, std::uint64_t seed,
                               int chi_value = 1);

}  // namespace affrep
