#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csr/core.hpp"
#include "csr/oracle.hpp"

namespace csr {

struct AxiomConfig {
  std::uint64_t seed = 0;
  /// Largest voter count of enumerated or sampled profiles.
  int max_voters = 3;
  /// Voter cap for each half of a consistency pair.
  int pair_max_voters = 2;
  /// Instance spaces up to this size are enumerated, larger ones sampled.
  long long exhaustive_limit = 100'000;
  /// Number of sampled instances when a space is too large.
  long long samples = 2'000;
  /// Continuity search horizon.
  long long n_max = 1'000;
  /// Largest multiplier for the symmetric-profile and homogeneity checks.
  int ell_max = 3;
  /// Oracle call budget per checker; exceeding it makes the verdict inconclusive.
  long long max_oracle_calls = 50'000'000;
};

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

/// Concrete violation. Every situation involved is stored by role name
/// together with the committees queried and the oracle answer observed.
struct Counterexample {
  struct Observation {
    std::string role;
    VotingSituation situation;
    Committee c1;
    Committee c2;
    int outcome = 0;
  };
  std::string axiom;
  Committee c1;
  Committee c2;
  std::vector<Observation> observations;
  /// Anonymity only: the two ordered profiles and their outcomes.
  std::vector<std::pair<Profile, int>> profiles;
  std::optional<Permutation> sigma;
  std::optional<long long> multiplier;
  /// Irrelevant swaps only: the swapped candidates and the edited vote.
  std::optional<std::pair<int, int>> swapped;
  std::optional<Vote> edited_vote;
  std::string explanation;
};

struct AxiomStats {
  long long instances = 0;
  long long skipped = 0;
  long long oracle_calls = 0;
  long long space_size = 0;
  bool exhaustive = false;
};

struct AxiomReport {
  std::string axiom;
  Verdict verdict = Verdict::pass;
  std::optional<Counterexample> counterexample;
  AxiomStats stats;
  /// Free-form remarks, e.g. continuity instances without a witness.
  std::vector<std::string> notes;
};

AxiomReport check_anonymity(const RuleOracle& oracle, const AxiomConfig& cfg);
AxiomReport check_neutrality(const RuleOracle& oracle, const AxiomConfig& cfg);
AxiomReport check_consistency(const RuleOracle& oracle, const AxiomConfig& cfg);
AxiomReport check_continuity(const RuleOracle& oracle, const AxiomConfig& cfg);
AxiomReport check_committee_dominance(const RuleOracle& oracle, const AxiomConfig& cfg);
AxiomReport check_independence_symmetric_profiles(const RuleOracle& oracle, const AxiomConfig& cfg);
AxiomReport check_homogeneity(const RuleOracle& oracle, const AxiomConfig& cfg);
AxiomReport check_irrelevant_swaps(const RuleOracle& oracle, const AxiomConfig& cfg);
/// comparator(P, C1, C2) = -comparator(P, C2, C1).
AxiomReport check_antisymmetry(const RuleOracle& oracle, const AxiomConfig& cfg);

/// Smallest n in [1, n_max] with oracle(P1 + n·P2, C1, C2) = +1, located by
/// doubling and bisection (exact for rules whose verdict is monotone in n).
std::optional<long long> continuity_witness(const RuleOracle& oracle, const VotingSituation& p1,
                                            const VotingSituation& p2, const Committee& c1, const Committee& c2,
                                            long long n_max, long long* calls = nullptr);

/// Runs every checker above in a fixed order.
std::vector<AxiomReport> run_suite(const RuleOracle& oracle, const AxiomConfig& cfg);

/// fail if any report failed, else inconclusive if any was, else pass.
Verdict summarize(const std::vector<AxiomReport>& reports);

/// Re-checks a counterexample from its serialized form: every situation is
/// written to profile text, parsed back, re-evaluated with the oracle, and
/// the axiom's condition is tested afresh. Returns an empty string when the
/// violation is confirmed, otherwise the reason it is not.
std::string confirm_counterexample(const RuleOracle& oracle, const Counterexample& cex);

}  // namespace csr
