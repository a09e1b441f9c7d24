#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csr/core.hpp"

namespace csr {

/// Table λ: [m]_k -> Q, stored in lexicographic order of positions.
class CommitteeScoringFunction {
 public:
  CommitteeScoringFunction() = default;
  /// `table[i]` is the value at the i-th position set of
  /// enumerate_positions(m, k). Throws DomainError on a size mismatch.
  CommitteeScoringFunction(int m, int k, std::vector<Rational> table, std::string label = "table");

  int m() const { return m_; }
  int k() const { return k_; }
  const std::string& label() const { return label_; }
  const std::vector<Rational>& table() const { return table_; }
  const std::vector<CommitteePosition>& positions() const { return positions_; }

  const Rational& operator()(const CommitteePosition& pos) const;
  const Rational& at_index(std::size_t i) const { return table_[i]; }

  /// True iff the table respects position dominance. Tables that fail are
  /// still usable, e.g. as negative controls.
  bool canonical() const { return canonical_; }
  bool is_constant() const;

  friend bool operator==(const CommitteeScoringFunction& a, const CommitteeScoringFunction& b) {
    return a.m_ == b.m_ && a.k_ == b.k_ && a.table_ == b.table_;
  }

 private:
  int m_ = 0;
  int k_ = 0;
  std::string label_;
  std::vector<CommitteePosition> positions_;
  std::vector<Rational> table_;
  bool canonical_ = true;
};

/// sntv, bloc, k-borda, cc or pav. `t` is the PAV approval depth (default k).
CommitteeScoringFunction builtin(std::string_view name, int m, int k, std::optional<int> t = std::nullopt);

/// Names accepted by builtin().
const std::vector<std::string>& builtin_names();

/// q·λ + c, entrywise.
CommitteeScoringFunction affine_transform(const CommitteeScoringFunction& lambda, const Rational& q,
                                          const Rational& c);

Rational committee_score(const CommitteeScoringFunction& lambda, const Committee& c, const VotingSituation& p);

/// Sign of score(C1) - score(C2).
int compare(const CommitteeScoringFunction& lambda, const Committee& c1, const Committee& c2,
            const VotingSituation& p);

/// Committees grouped into classes of equal score, best class first.
struct WeakOrder {
  std::vector<std::vector<Committee>> classes;
  std::vector<Rational> scores;
};

WeakOrder rank_committees(const CommitteeScoringFunction& lambda, const VotingSituation& p,
                          long long max_committees = 100'000);

struct DominanceCheck {
  bool ok = true;
  /// (I, J) with I dominating J but λ(I) < λ(J).
  std::optional<std::pair<CommitteePosition, CommitteePosition>> violation;
};

DominanceCheck check_dominance_monotone(const CommitteeScoringFunction& lambda);

/// TSV table: header line "<m> <k>", then "<i1,i2,...>\t<rational>" per
/// position set in lexicographic order.
std::string serialize_scoring_table(const CommitteeScoringFunction& lambda);
/// Accepts the header as "<m> <k>" or "m=<m> k=<k>"; rows in any order,
/// every position set exactly once; '#' comments and blank lines ignored.
CommitteeScoringFunction parse_scoring_table(std::string_view text, std::string label = "table");

}  // namespace csr
