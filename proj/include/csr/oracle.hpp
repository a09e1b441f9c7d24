#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csr/core.hpp"
#include "csr/decision.hpp"
#include "csr/scoring.hpp"

namespace csr {

/// Black-box k-decision rule: compares two committees under a voting
/// situation and answers +1 (C1 preferred), 0 (tie) or -1.
class RuleOracle {
 public:
  using SituationFn = std::function<int(const VotingSituation&, const Committee&, const Committee&)>;
  using ProfileFn = std::function<int(const Profile&, const Committee&, const Committee&)>;

  RuleOracle(std::string label, int m, int k, SituationFn on_situation, ProfileFn on_profile = nullptr,
             bool thread_safe = true);

  const std::string& label() const { return label_; }
  int m() const { return m_; }
  int k() const { return k_; }
  /// Whether concurrent read-only queries are allowed.
  bool thread_safe() const { return thread_safe_; }

  int operator()(const VotingSituation& p, const Committee& c1, const Committee& c2) const;
  /// Profile-level query. Oracles without a dedicated profile comparator
  /// answer on the anonymized situation.
  int on_profile(const Profile& p, const Committee& c1, const Committee& c2) const;

 private:
  std::string label_;
  int m_;
  int k_;
  SituationFn on_situation_;
  ProfileFn on_profile_;
  bool thread_safe_;
};

/// Committee scoring rule with table λ.
RuleOracle scoring_oracle(const CommitteeScoringFunction& lambda);

/// Decision scoring rule; committees must meet in d.s() members (or be equal).
RuleOracle decision_oracle(const DecisionScoringFunction& d);

/// Always 0.
RuleOracle trivial_oracle(int m, int k);

/// Compares committees by the best member's total Borda score. On a tie at
/// the top, committees sharing a best-scoring member are equal; otherwise
/// the remaining member scores decide, best first.
RuleOracle leximax_oracle(int m, int k);

/// The voter with the smallest id decides alone, by k-Borda on their vote.
/// On situations, the lexicographically first vote plays that role.
RuleOracle first_voter_oracle(int m, int k);

/// Committees containing candidate 1 beat committees without it; other
/// pairs are ranked by k-Borda.
RuleOracle favor_candidate_oracle(int m, int k);

/// k-Borda, but a committee only wins if its score lead is at least 2.
RuleOracle absolute_threshold_oracle(int m, int k);

/// Builds an oracle from a name: a scoring builtin ("sntv", "bloc",
/// "k-borda", "cc", "pav", "pav:<t>"), "majority", "leximax", "trivial",
/// "first-voter", "favor-first", "threshold". Returns nullopt for
/// unknown names.
std::optional<RuleOracle> named_oracle(std::string_view name, int m, int k);

/// Names accepted by named_oracle besides the scoring builtins.
const std::vector<std::string>& extra_oracle_names();

}  // namespace csr
