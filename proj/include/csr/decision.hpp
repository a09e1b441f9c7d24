#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csr/core.hpp"
#include "csr/scoring.hpp"

namespace csr {

/// Antisymmetric table d on pairs (I1, I2) of [m]_k with |I1 ∩ I2| = s.
class DecisionScoringFunction {
 public:
  using Key = std::pair<CommitteePosition, CommitteePosition>;

  DecisionScoringFunction() = default;
  /// Fills the table from `fn` evaluated on pairs with I1 < I2
  /// lexicographically; the other orientation is its negation.
  DecisionScoringFunction(int m, int k, int s,
                          const std::function<Rational(const CommitteePosition&, const CommitteePosition&)>& fn,
                          std::string label = "decision");

  int m() const { return m_; }
  int k() const { return k_; }
  int s() const { return s_; }
  const std::string& label() const { return label_; }

  /// Throws DomainError if the pair is outside the table domain.
  const Rational& operator()(const CommitteePosition& i1, const CommitteePosition& i2) const;
  bool in_domain(const CommitteePosition& i1, const CommitteePosition& i2) const;

  /// Stored pairs with I1 < I2, in lexicographic order.
  std::vector<std::pair<Key, Rational>> upper_entries() const;

 private:
  int m_ = 0;
  int k_ = 0;
  int s_ = 0;
  std::string label_;
  std::map<Key, Rational> table_;
};

/// d_maj for k = 1: +1 if i1 < i2, -1 otherwise.
DecisionScoringFunction majority(int m, int k = 1);

/// g(I1, I2) = λ(I1) - λ(I2) on pairs with intersection size s.
DecisionScoringFunction from_scoring(const CommitteeScoringFunction& lambda, int s);

/// Σ_v P(v) d(pos_v(C1), pos_v(C2)). Returns 0 for C1 = C2.
Rational pair_score(const DecisionScoringFunction& d, const Committee& c1, const Committee& c2,
                    const VotingSituation& p);

/// Sign of pair_score.
int decide(const DecisionScoringFunction& d, const Committee& c1, const Committee& c2, const VotingSituation& p);

/// Committees (A, B, C) with A ≻ B, B ≻ C and C ≻ A among the given
/// committees, restricted to triples whose pairs all meet in s members.
/// Triples are scanned in index order; the first hit is returned.
std::optional<std::array<Committee, 3>> find_intransitivity(const DecisionScoringFunction& d, const VotingSituation& p,
                                                            const std::vector<Committee>& committees);

/// TSV: header "<m> <k> <s>", rows "<I1>\t<I2>\t<rational>" with I1 < I2.
std::string serialize_decision_table(const DecisionScoringFunction& d);
/// Rows must cover every pair in the domain exactly once (either orientation).
DecisionScoringFunction parse_decision_table(std::string_view text, std::string label = "decision-table");

}  // namespace csr
