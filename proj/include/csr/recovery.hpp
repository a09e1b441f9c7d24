#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csr/core.hpp"
#include "csr/oracle.hpp"
#include "csr/scoring.hpp"

namespace csr {

/// Reference pair of positions (I1*, I2*) for comparing C1 and C2. The
/// single vote v(C1->I1*, C2->I2*) makes the oracle strictly prefer C1.
struct Gauge {
  Committee c1;
  Committee c2;
  CommitteePosition i1_star;
  CommitteePosition i2_star;
  /// The scan first met the pair with C2 preferred and swapped it.
  bool reoriented = false;
};

/// Δ for one ordered Johnson edge: either exact, or the bracket [lo, hi]
/// left when the search hit its bound. A missing end is unbounded.
struct DeltaValue {
  std::optional<Rational> exact;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  std::size_t queries = 0;

  bool is_exact() const { return exact.has_value(); }
  std::string to_string() const;
};

using PositionPair = std::pair<CommitteePosition, CommitteePosition>;

struct DeltaTable {
  int m = 0;
  int k = 0;
  /// Unset when the oracle never separates C1 and C2 (trivial verdict).
  std::optional<Gauge> gauge;
  /// Keyed by ordered pairs (I, J) with |I ∩ J| = k-1.
  std::map<PositionPair, DeltaValue> entries;

  bool trivial() const { return !gauge.has_value(); }
  const DeltaValue& at(const CommitteePosition& i, const CommitteePosition& j) const;
};

struct Residual {
  CommitteePosition i;
  CommitteePosition j;
  /// Δ(I, J) - (λ(I) - λ(J)).
  Rational value;
};

struct RecoveredScoring {
  CommitteeScoringFunction lambda;
  /// Position fixed to 0: {m-k+1, ..., m}.
  CommitteePosition reference;
  std::optional<Gauge> gauge;
  /// One entry per ordered Johnson edge other than the path edges used for
  /// integration. Reverses of path edges check antisymmetry.
  std::vector<Residual> residuals;
  bool trivial = false;

  bool consistent() const;
};

/// Raised when the Δ data do not integrate to a single λ. Carries the
/// tentative table and every residual.
class InconsistentOracleError : public std::runtime_error {
 public:
  InconsistentOracleError(const std::string& what, RecoveredScoring partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const RecoveredScoring& partial() const { return partial_; }

 private:
  RecoveredScoring partial_;
};

/// The committees the recovery compares: {1..k} and {1..k-1, k+1}.
std::pair<Committee, Committee> recovery_committees(int k);

/// y copies of v(C1->I1g, C2->I2g) plus x copies of v(C1->I1, C2->I2).
VotingSituation distinguished_situation(int m, const Committee& c1, const CommitteePosition& i1, const Committee& c2,
                                        const CommitteePosition& i2, long long x, long long y,
                                        const CommitteePosition& i1g, const CommitteePosition& i2g);

/// Scans pairs (I1, I2) with |I1 ∩ I2| = |C1 ∩ C2| in lexicographic order
/// and returns the first one whose single vote separates C1 and C2,
/// oriented so that C1 wins. nullopt means no single vote separates them.
std::optional<Gauge> find_gauge(const RuleOracle& oracle, const Committee& c1, const Committee& c2);

/// Threshold Δ(I1, I2) in units of the gauge, found by mediant descent on
/// the Stern-Brocot tree over ratios y/x with y, x <= bound.
DeltaValue estimate_delta(const RuleOracle& oracle, const CommitteePosition& i1, const CommitteePosition& i2,
                          const Gauge& gauge, long long bound);

/// Δ for both orientations of every Johnson edge of [m]_k.
DeltaTable estimate_delta_table(const RuleOracle& oracle, long long bound);

/// Sums Δ along the Johnson path from the reference {m-k+1..m} and checks
/// every other edge. Throws DomainError if a needed Δ is an interval and
/// InconsistentOracleError if any residual is nonzero.
RecoveredScoring integrate_lambda(const DeltaTable& deltas, int m, int k);

/// (λ - λ(reference)) / (λ(I1*) - λ(I2*)): the normalization recovery
/// produces for a scoring rule with table λ. A constant λ maps to zeros.
CommitteeScoringFunction normalize_scoring(const CommitteeScoringFunction& lambda,
                                           const std::optional<Gauge>& gauge);

struct RecoveryOptions {
  std::uint64_t seed = 0;
  int situations = 200;
  int min_voters = 1;
  int max_voters = 12;
  /// Details kept for at most this many mismatches.
  std::size_t max_reported = 5;
};

struct VerificationMismatch {
  VotingSituation situation;
  Committee c1;
  Committee c2;
  int oracle_verdict = 0;
  int recovered_verdict = 0;
};

struct VerificationStats {
  std::size_t situations = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::vector<VerificationMismatch> examples;
};

struct VerificationReport {
  /// Committee pairs sharing k-1 members.
  VerificationStats adjacent;
  /// All pairs of distinct committees.
  VerificationStats all_pairs;

  bool passed() const { return adjacent.mismatches == 0 && all_pairs.mismatches == 0; }
};

/// Compares the oracle with sign(score(C1) - score(C2)) under λ on seeded
/// random situations, for every pair of distinct committees.
VerificationReport verify_recovered(const RuleOracle& oracle, const CommitteeScoringFunction& lambda,
                                    const RecoveryOptions& options = {});

struct RecoveryResult {
  RecoveredScoring scoring;
  DeltaTable deltas;
  VerificationReport verification;
};

/// Gauge search, Δ estimation on every Johnson edge, integration, then
/// verification of the recovered λ against the oracle on seeded random
/// situations. Throws InconsistentOracleError or DomainError from
/// integration; mismatches are reported, not thrown.
RecoveryResult recover_scoring(const RuleOracle& oracle, long long bound, const RecoveryOptions& options = {});

struct CaseReport {
  /// 1: a witness tuple exists; 2: none does.
  int case_number = 2;
  bool even = true;
  /// Positions p_1..p_{2k-k'} of the witness.
  std::vector<int> witness;
  /// Shift x of the odd-case witness.
  std::optional<int> x;
  /// Odd k-k', Case 2, odd k: λ is constant (checked against the table).
  bool constant = false;
  /// Odd k-k', Case 2, even k: λ(q1..qk) - λ(q2..qk+1) = λ(q2..qk+1) -
  /// λ(q3..qk+2) for every tuple of k+2 distinct positions.
  std::optional<bool> cyclic_identity;
  std::size_t tuples_checked = 0;

  std::string label() const;
};

/// Searches tuples of 2k-k' distinct positions for a witness that λ
/// separates C1 and C2 with |C1 ∩ C2| = k' through an intermediate
/// committee. Requires 0 <= k' <= k-2 and 2k-k' <= m.
CaseReport classify_case(const CommitteeScoringFunction& lambda, int k_prime);

}  // namespace csr
