#include "csr/recovery.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "csr/combinat.hpp"
#include "csr/errors.hpp"
#include "csr/random.hpp"

namespace csr {

namespace {

std::size_t overlap(const std::vector<int>& a, const std::vector<int>& b) { return set_intersection(a, b).size(); }

int single_verdict(const RuleOracle& oracle, const Committee& c1, const CommitteePosition& i1, const Committee& c2,
                   const CommitteePosition& i2) {
  VotingSituation p(oracle.m());
  p.add(place_committees(oracle.m(), c1, i1, c2, i2), 1);
  return oracle(p, c1, c2);
}

std::string format_pos(const CommitteePosition& pos) {
  std::string out = "{";
  for (std::size_t t = 0; t < pos.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(pos[t]);
  }
  return out + "}";
}

}  // namespace

std::string DeltaValue::to_string() const {
  if (exact) return exact->to_string();
  return "[" + (lo ? lo->to_string() : std::string("-inf")) + ", " + (hi ? hi->to_string() : std::string("inf")) +
         "]";
}

const DeltaValue& DeltaTable::at(const CommitteePosition& i, const CommitteePosition& j) const {
  const auto it = entries.find({i, j});
  if (it == entries.end()) throw DomainError("no delta stored for " + format_pos(i) + " -> " + format_pos(j));
  return it->second;
}

bool RecoveredScoring::consistent() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.value.is_zero(); });
}

std::pair<Committee, Committee> recovery_committees(int k) {
  if (k < 1) throw DomainError("recovery needs k >= 1");
  Committee c1;
  for (int a = 1; a <= k; ++a) c1.push_back(a);
  Committee c2(c1.begin(), c1.end() - 1);
  c2.push_back(k + 1);
  return {c1, c2};
}

VotingSituation distinguished_situation(int m, const Committee& c1, const CommitteePosition& i1, const Committee& c2,
                                        const CommitteePosition& i2, long long x, long long y,
                                        const CommitteePosition& i1g, const CommitteePosition& i2g) {
  if (x < 0 || y < 0) throw DomainError("distinguished_situation: negative multiplicity");
  // Both placements are validated even when a block is empty.
  const Vote gauge_vote = place_committees(m, c1, i1g, c2, i2g);
  const Vote edge_vote = place_committees(m, c1, i1, c2, i2);
  VotingSituation p(m);
  p.add(gauge_vote, Rational(static_cast<long>(y)));
  p.add(edge_vote, Rational(static_cast<long>(x)));
  return p;
}

std::optional<Gauge> find_gauge(const RuleOracle& oracle, const Committee& c1, const Committee& c2) {
  const int m = oracle.m();
  const int k = oracle.k();
  if (static_cast<int>(c1.size()) != k || static_cast<int>(c2.size()) != k || c1 == c2) {
    throw DomainError("find_gauge: need two distinct committees of size k");
  }
  const std::size_t s = overlap(c1, c2);
  const auto positions = enumerate_positions(m, k);
  for (const auto& i1 : positions) {
    for (const auto& i2 : positions) {
      if (i1 == i2 || overlap(i1, i2) != s) continue;
      const int verdict = single_verdict(oracle, c1, i1, c2, i2);
      if (verdict > 0) return Gauge{c1, c2, i1, i2, false};
      // A neutral rule prefers C1 once the two placements are swapped;
      // the swapped pair is checked rather than assumed.
      if (verdict < 0 && single_verdict(oracle, c1, i2, c2, i1) > 0) return Gauge{c1, c2, i2, i1, true};
    }
  }
  return std::nullopt;
}

DeltaValue estimate_delta(const RuleOracle& oracle, const CommitteePosition& i1, const CommitteePosition& i2,
                          const Gauge& gauge, long long bound) {
  if (bound < 1) throw DomainError("estimate_delta: bound must be at least 1");
  const int m = oracle.m();
  const std::size_t s = overlap(gauge.c1, gauge.c2);
  if (overlap(gauge.i1_star, gauge.i2_star) != s || gauge.i1_star == gauge.i2_star) {
    throw DomainError("estimate_delta: gauge positions do not match the committee overlap");
  }
  if (overlap(i1, i2) != s || i1 == i2) throw DomainError("estimate_delta: position overlap mismatch");

  DeltaValue out;
  if (single_verdict(oracle, gauge.c1, gauge.i1_star, gauge.c2, gauge.i2_star) <= 0) {
    throw DomainError("estimate_delta: invalid gauge, C1 does not win its single vote");
  }
  const int branch = single_verdict(oracle, gauge.c1, i1, gauge.c2, i2);
  out.queries = 2;
  if (branch == 0) {
    out.exact = Rational(0);
    return out;
  }

  // The gauge block is reversed in the second branch so that the two
  // blocks pull in opposite directions.
  const CommitteePosition& g1 = branch > 0 ? gauge.i1_star : gauge.i2_star;
  const CommitteePosition& g2 = branch > 0 ? gauge.i2_star : gauge.i1_star;
  long long a = 0, b = 1, c = 1, d = 0;  // lo = a/b, hi = c/d
  std::optional<Rational> hit;
  while (true) {
    const long long y = a + c;
    const long long x = b + d;
    if (y > bound || x > bound) break;
    const auto p = distinguished_situation(m, gauge.c1, i2, gauge.c2, i1, x, y, g1, g2);
    const int verdict = oracle(p, gauge.c1, gauge.c2);
    ++out.queries;
    if (verdict == 0) {
      hit = Rational(y, x);
      break;
    }
    // First branch: the set {y/x : C2 wins} lies below the threshold.
    // Second branch: it lies above.
    const bool below = branch > 0 ? verdict < 0 : verdict > 0;
    if (below) {
      a = y;
      b = x;
    } else {
      c = y;
      d = x;
    }
  }
  const Rational sign(branch > 0 ? 1 : -1);
  if (hit) {
    out.exact = sign * *hit;
    return out;
  }
  std::optional<Rational> lo = Rational(a, b);
  std::optional<Rational> hi;
  if (d != 0) hi = Rational(c, d);
  if (branch > 0) {
    out.lo = lo;
    out.hi = hi;
  } else {
    if (hi) out.lo = -*hi;
    out.hi = -*lo;
  }
  return out;
}

DeltaTable estimate_delta_table(const RuleOracle& oracle, long long bound) {
  const int m = oracle.m();
  const int k = oracle.k();
  if (k < 1 || k >= m) throw DomainError("recovery needs 1 <= k < m");
  DeltaTable table;
  table.m = m;
  table.k = k;
  const auto [c1, c2] = recovery_committees(k);
  table.gauge = find_gauge(oracle, c1, c2);
  if (!table.gauge) return table;
  const auto positions = enumerate_positions(m, k);
  for (const auto& i : positions) {
    for (const auto& j : positions) {
      if (i == j || static_cast<int>(overlap(i, j)) != k - 1) continue;
      table.entries.emplace(PositionPair{i, j}, estimate_delta(oracle, i, j, *table.gauge, bound));
    }
  }
  return table;
}

RecoveredScoring integrate_lambda(const DeltaTable& deltas, int m, int k) {
  if (k < 1 || k >= m) throw DomainError("integrate_lambda needs 1 <= k < m");
  if (deltas.m != m || deltas.k != k) throw DomainError("integrate_lambda: table dimensions differ");
  const auto positions = enumerate_positions(m, k);
  RecoveredScoring out;
  out.gauge = deltas.gauge;
  out.reference = positions.back();
  if (deltas.trivial()) {
    out.trivial = true;
    out.lambda = CommitteeScoringFunction(m, k, std::vector<Rational>(positions.size()), "recovered");
    return out;
  }

  auto exact = [&](const CommitteePosition& i, const CommitteePosition& j) -> const Rational& {
    const auto& v = deltas.at(i, j);
    if (!v.exact) {
      throw DomainError("delta " + format_pos(i) + " -> " + format_pos(j) + " is only bracketed: " + v.to_string());
    }
    return *v.exact;
  };

  const auto path = johnson_path(k, m);
  std::vector<Rational> table(positions.size());
  for (std::size_t t = path.size() - 1; t-- > 0;) {
    table[position_index(path[t], m)] = table[position_index(path[t + 1], m)] + exact(path[t], path[t + 1]);
  }
  out.lambda = CommitteeScoringFunction(m, k, table, "recovered");

  std::set<PositionPair> tree;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) tree.insert({path[t], path[t + 1]});
  for (const auto& [edge, value] : deltas.entries) {
    (void)value;
    if (tree.count(edge)) continue;
    const auto& [i, j] = edge;
    const Rational implied = out.lambda(i) - out.lambda(j);
    out.residuals.push_back({i, j, exact(i, j) - implied});
  }
  for (const auto& r : out.residuals) {
    if (!r.value.is_zero()) {
      throw InconsistentOracleError("cycle closure fails on " + format_pos(r.i) + " -> " + format_pos(r.j) +
                                        ": residual " + r.value.to_string(),
                                    out);
    }
  }
  return out;
}

CommitteeScoringFunction normalize_scoring(const CommitteeScoringFunction& lambda, const std::optional<Gauge>& gauge) {
  const int m = lambda.m();
  const int k = lambda.k();
  if (lambda.is_constant()) {
    return CommitteeScoringFunction(m, k, std::vector<Rational>(lambda.table().size()), lambda.label());
  }
  if (!gauge) throw DomainError("normalize_scoring: non-constant table needs a gauge");
  const Rational unit = lambda(gauge->i1_star) - lambda(gauge->i2_star);
  if (unit.is_zero()) throw DomainError("normalize_scoring: gauge positions have equal scores");
  const Rational base = lambda(lambda.positions().back());
  std::vector<Rational> table;
  table.reserve(lambda.table().size());
  for (const auto& q : lambda.table()) table.push_back((q - base) / unit);
  return CommitteeScoringFunction(m, k, std::move(table), lambda.label());
}

VerificationReport verify_recovered(const RuleOracle& oracle, const CommitteeScoringFunction& lambda,
                                    const RecoveryOptions& options) {
  if (options.min_voters < 1 || options.max_voters < options.min_voters || options.situations < 0) {
    throw DomainError("verification: invalid sampling options");
  }
  const int m = oracle.m();
  const int k = oracle.k();
  if (lambda.m() != m || lambda.k() != k) throw DomainError("verification: table dimensions differ");
  const auto committees = enumerate_positions(m, k);
  Rng rng(options.seed);
  VerificationReport out;
  auto& adj = out.adjacent;
  auto& all = out.all_pairs;
  for (int n = 0; n < options.situations; ++n) {
    const auto p = rng.situation(m, static_cast<int>(rng.between(options.min_voters, options.max_voters)));
    ++adj.situations;
    ++all.situations;
    for (std::size_t a = 0; a < committees.size(); ++a) {
      for (std::size_t b = a + 1; b < committees.size(); ++b) {
        const auto& c1 = committees[a];
        const auto& c2 = committees[b];
        const int expected = oracle(p, c1, c2);
        const int got = compare(lambda, c1, c2, p);
        const bool adjacent = static_cast<int>(overlap(c1, c2)) == k - 1;
        for (auto* stats : {adjacent ? &adj : nullptr, &all}) {
          if (!stats) continue;
          ++stats->comparisons;
          if (expected == got) continue;
          ++stats->mismatches;
          if (stats->examples.size() < options.max_reported) stats->examples.push_back({p, c1, c2, expected, got});
        }
      }
    }
  }
  return out;
}

RecoveryResult recover_scoring(const RuleOracle& oracle, long long bound, const RecoveryOptions& options) {
  RecoveryResult out;
  out.deltas = estimate_delta_table(oracle, bound);
  out.scoring = integrate_lambda(out.deltas, oracle.m(), oracle.k());
  out.verification = verify_recovered(oracle, out.scoring.lambda, options);
  return out;
}

std::string CaseReport::label() const {
  std::ostringstream os;
  os << "case " << case_number << (even ? " (even k-k')" : " (odd k-k')");
  if (case_number == 2 && !even) {
    if (cyclic_identity) os << (*cyclic_identity ? ", cyclic identity holds" : ", cyclic identity fails");
    else os << (constant ? ", lambda constant" : ", lambda not constant");
  }
  return os.str();
}

namespace {

// Calls f on every tuple of n distinct values from 1..m, in lexicographic order.
template <typename F>
bool for_each_tuple(int m, int n, F&& f) {
  std::vector<int> tuple;
  std::vector<char> used(m + 1, 0);
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(tuple.size()) == n) return f(tuple);
    for (int v = 1; v <= m; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      tuple.push_back(v);
      const bool stop = self(self);
      tuple.pop_back();
      used[v] = 0;
      if (stop) return true;
    }
    return false;
  };
  return rec(rec);
}

// λ of the set {p_from, ..., p_to}, 1-based inclusive.
Rational segment(const CommitteeScoringFunction& lambda, const std::vector<int>& p, int from, int to) {
  CommitteePosition pos(p.begin() + (from - 1), p.begin() + to);
  std::sort(pos.begin(), pos.end());
  return lambda(pos);
}

}  // namespace

CaseReport classify_case(const CommitteeScoringFunction& lambda, int k_prime) {
  const int m = lambda.m();
  const int k = lambda.k();
  if (k_prime < 0 || k_prime > k - 2) throw DomainError("classify_case: need 0 <= k' <= k-2");
  const int n = 2 * k - k_prime;
  if (n > m) throw DomainError("classify_case: need 2k-k' <= m");
  long long tuples = 1;
  for (int t = 0; t < n; ++t) tuples *= m - t;
  if (tuples > 10'000'000) throw ResourceError("classify_case: too many position tuples");

  const int diff = k - k_prime;
  CaseReport out;
  out.even = diff % 2 == 0;
  for_each_tuple(m, n, [&](const std::vector<int>& p) {
    ++out.tuples_checked;
    const Rational outer = segment(lambda, p, 1, k) + segment(lambda, p, diff + 1, n);
    if (out.even) {
      const int h = diff / 2;
      if (outer != Rational(2) * segment(lambda, p, h + 1, h + k)) {
        out.case_number = 1;
        out.witness = p;
        return true;
      }
      return false;
    }
    for (int x = 1; x <= diff; ++x) {
      if (outer != segment(lambda, p, x, k + x - 1) + segment(lambda, p, diff + 2 - x, n + 1 - x)) {
        out.case_number = 1;
        out.witness = p;
        out.x = x;
        return true;
      }
    }
    return false;
  });
  if (out.case_number == 1 || out.even) return out;

  if (k % 2 == 1) {
    out.constant = lambda.is_constant();
    return out;
  }
  bool holds = true;
  for_each_tuple(m, k + 2, [&](const std::vector<int>& q) {
    const Rational a = segment(lambda, q, 1, k);
    const Rational b = segment(lambda, q, 2, k + 1);
    const Rational c = segment(lambda, q, 3, k + 2);
    if (a - b != b - c) holds = false;
    return !holds;
  });
  out.cyclic_identity = holds;
  out.constant = lambda.is_constant();
  return out;
}

}  // namespace csr
