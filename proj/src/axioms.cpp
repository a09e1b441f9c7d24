#include "csr/axioms.hpp"

#include <algorithm>
#include <map>

#include "csr/combinat.hpp"
#include "csr/errors.hpp"
#include "csr/profile_io.hpp"
#include "csr/random.hpp"

namespace csr {

namespace {

struct BudgetExhausted {};

long long multichoose(long long items, long long n) { return binomial(static_cast<int>(items + n - 1), static_cast<int>(n)); }

// Natural situations with between lo and hi voters, indexed by size then
// by the lexicographic order of nondecreasing vote-index sequences.
class SituationSpace {
 public:
  SituationSpace(int m, int lo, int hi) : m_(m), votes_(all_votes(m)), lo_(lo) {
    for (int n = lo; n <= hi; ++n) sizes_.push_back(multichoose(static_cast<long long>(votes_.size()), n));
  }

  long long size() const {
    long long total = 0;
    for (long long s : sizes_) total += s;
    return total;
  }

  VotingSituation at(long long idx) const {
    int n = lo_;
    for (long long s : sizes_) {
      if (idx < s) break;
      idx -= s;
      ++n;
    }
    const long long items = static_cast<long long>(votes_.size());
    VotingSituation p(m_);
    long long prev = 0;
    for (int t = 0; t < n; ++t) {
      const int rest = n - t - 1;
      for (long long v = prev; v < items; ++v) {
        const long long cnt = multichoose(items - v, rest);
        if (idx < cnt) {
          p.add(votes_[v], 1);
          prev = v;
          break;
        }
        idx -= cnt;
      }
    }
    return p;
  }

 private:
  int m_;
  std::vector<Vote> votes_;
  int lo_;
  std::vector<long long> sizes_;
};

// Visits instance indices: all of them when the space is small enough,
// otherwise a seeded uniform sample.
template <typename Fn>
void drive(long long space, const AxiomConfig& cfg, std::uint64_t salt, AxiomStats& stats, Fn&& fn) {
  stats.space_size = space;
  stats.exhaustive = space <= cfg.exhaustive_limit;
  if (stats.exhaustive) {
    for (long long i = 0; i < space; ++i) {
      ++stats.instances;
      if (!fn(i)) return;
    }
    return;
  }
  Rng rng(cfg.seed * 0x9E3779B97F4A7C15ULL + salt);
  for (long long s = 0; s < cfg.samples; ++s) {
    const long long i = static_cast<long long>(rng.below(static_cast<std::uint64_t>(space)));
    ++stats.instances;
    if (!fn(i)) return;
  }
}

class Asker {
 public:
  Asker(const RuleOracle& oracle, const AxiomConfig& cfg, AxiomStats& stats)
      : oracle_(oracle), limit_(cfg.max_oracle_calls), stats_(stats) {}

  int operator()(const VotingSituation& p, const Committee& c1, const Committee& c2) {
    tick();
    return oracle_(p, c1, c2);
  }
  int profile(const Profile& p, const Committee& c1, const Committee& c2) {
    tick();
    return oracle_.on_profile(p, c1, c2);
  }

 private:
  void tick() {
    if (++stats_.oracle_calls > limit_) throw BudgetExhausted{};
  }

  const RuleOracle& oracle_;
  long long limit_;
  AxiomStats& stats_;
};

std::vector<Committee> all_committees(const RuleOracle& oracle) { return enumerate_positions(oracle.m(), oracle.k()); }

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<Pair> unordered_pairs(std::size_t n) {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

// Runs `body`, mapping budget exhaustion to an inconclusive verdict.
template <typename Fn>
AxiomReport run_checker(const std::string& name, const RuleOracle& oracle, const AxiomConfig& cfg, Fn&& body) {
  AxiomReport report;
  report.axiom = name;
  try {
    Asker ask(oracle, cfg, report.stats);
    body(report, ask);
  } catch (const BudgetExhausted&) {
    report.verdict = Verdict::inconclusive;
    report.notes.push_back("oracle call budget of " + std::to_string(cfg.max_oracle_calls) + " exhausted");
  }
  if (report.counterexample) report.verdict = Verdict::fail;
  return report;
}

Counterexample::Observation obs(std::string role, VotingSituation p, Committee c1, Committee c2, int outcome) {
  return {std::move(role), std::move(p), std::move(c1), std::move(c2), outcome};
}

Vote swap_in_vote(const Vote& v, int a, int b) {
  std::vector<int> order = v.order();
  for (int& c : order) {
    if (c == a) {
      c = b;
    } else if (c == b) {
      c = a;
    }
  }
  return Vote(std::move(order));
}

bool contains(const Committee& c, int a) { return std::binary_search(c.begin(), c.end(), a); }

// Swap classes: both outside C1 ∪ C2, both shared, both only in C1, both only in C2.
bool swap_eligible(const Committee& c1, const Committee& c2, int a, int b) {
  const bool a1 = contains(c1, a);
  const bool a2 = contains(c2, a);
  const bool b1 = contains(c1, b);
  const bool b2 = contains(c2, b);
  return a1 == b1 && a2 == b2;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

AxiomReport check_anonymity(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("anonymity", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    if (cfg.max_voters < 2) return;
    const SituationSpace space(oracle.m(), 2, cfg.max_voters);
    const auto committees = all_committees(oracle);
    const auto pairs = unordered_pairs(committees.size());
    drive(space.size(), cfg, 1, report.stats, [&](long long idx) {
      const auto p = space.at(idx);
      std::vector<Vote> seq;
      for (const auto& [v, q] : p) {
        for (Rational i = 0; i < q; i += 1) seq.push_back(v);
      }
      Profile base(oracle.m());
      for (std::size_t i = 0; i < seq.size(); ++i) base.add(static_cast<int>(i) + 1, seq[i]);
      std::vector<int> base_out;
      for (const auto& [a, b] : pairs) base_out.push_back(ask.profile(base, committees[a], committees[b]));
      std::vector<Vote> arrangement = seq;
      while (std::next_permutation(arrangement.begin(), arrangement.end())) {
        Profile other(oracle.m());
        for (std::size_t i = 0; i < arrangement.size(); ++i) other.add(static_cast<int>(i) + 1, arrangement[i]);
        for (std::size_t t = 0; t < pairs.size(); ++t) {
          const auto& c1 = committees[pairs[t].first];
          const auto& c2 = committees[pairs[t].second];
          const int r = ask.profile(other, c1, c2);
          if (r != base_out[t]) {
            Counterexample cex;
            cex.axiom = report.axiom;
            cex.c1 = c1;
            cex.c2 = c2;
            cex.profiles = {{base, base_out[t]}, {other, r}};
            cex.explanation = "reordering the voters changes the outcome";
            report.counterexample = std::move(cex);
            return false;
          }
        }
      }
      return true;
    });
  });
}

AxiomReport check_neutrality(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("neutrality", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    const SituationSpace space(oracle.m(), 1, cfg.max_voters);
    const auto perms = all_votes(oracle.m());
    const long long np = static_cast<long long>(perms.size());
    const auto committees = all_committees(oracle);
    const auto pairs = unordered_pairs(committees.size());
    long long cached = -1;
    VotingSituation p;
    std::vector<int> base_out;
    drive(space.size() * np, cfg, 2, report.stats, [&](long long idx) {
      if (idx / np != cached) {
        cached = idx / np;
        p = space.at(cached);
        base_out.clear();
        for (const auto& [a, b] : pairs) base_out.push_back(ask(p, committees[a], committees[b]));
      }
      const Permutation sigma(perms[idx % np].order());
      const auto sp = apply_permutation(sigma, p);
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto& c1 = committees[pairs[t].first];
        const auto& c2 = committees[pairs[t].second];
        const auto s1 = apply_permutation(sigma, c1);
        const auto s2 = apply_permutation(sigma, c2);
        const int r = ask(sp, s1, s2);
        if (r != base_out[t]) {
          Counterexample cex;
          cex.axiom = report.axiom;
          cex.c1 = c1;
          cex.c2 = c2;
          cex.sigma = sigma;
          cex.observations = {obs("P", p, c1, c2, base_out[t]), obs("sigma(P)", sp, s1, s2, r)};
          cex.explanation = "relabeling candidates by sigma does not relabel the outcome";
          report.counterexample = std::move(cex);
          return false;
        }
      }
      return true;
    });
  });
}

AxiomReport check_consistency(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("consistency", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    const SituationSpace space(oracle.m(), 1, cfg.pair_max_voters);
    const long long n = space.size();
    const auto committees = all_committees(oracle);
    const auto pairs = unordered_pairs(committees.size());
    drive(n * n, cfg, 3, report.stats, [&](long long idx) {
      const auto p = space.at(idx / n);
      const auto q = space.at(idx % n);
      const auto pq = combine(p, q);
      for (const auto& [a, b] : pairs) {
        const auto& c1 = committees[a];
        const auto& c2 = committees[b];
        const int r1 = ask(p, c1, c2);
        const int r2 = ask(q, c1, c2);
        const int r = ask(pq, c1, c2);
        // Orientation s = +1 checks (C1, C2), s = -1 checks (C2, C1).
        for (int s : {1, -1}) {
          const int x1 = s * r1;
          const int x2 = s * r2;
          const int x = s * r;
          if (x1 < 0 || x2 < 0) continue;
          const bool strict = x1 > 0 || x2 > 0;
          if (x < 0 || (strict && x == 0)) {
            Counterexample cex;
            cex.axiom = report.axiom;
            cex.c1 = s > 0 ? c1 : c2;
            cex.c2 = s > 0 ? c2 : c1;
            cex.observations = {obs("P", p, cex.c1, cex.c2, x1), obs("P'", q, cex.c1, cex.c2, x2),
                                obs("P+P'", pq, cex.c1, cex.c2, x)};
            cex.explanation = strict ? "C1 is weakly preferred in both parts and strictly in one, but not strictly "
                                       "preferred in the union"
                                     : "C1 is weakly preferred in both parts but loses in the union";
            report.counterexample = std::move(cex);
            return false;
          }
        }
      }
      return true;
    });
  });
}

std::optional<long long> continuity_witness(const RuleOracle& oracle, const VotingSituation& p1,
                                            const VotingSituation& p2, const Committee& c1, const Committee& c2,
                                            long long n_max, long long* calls) {
  auto wins = [&](long long n) {
    if (calls) ++*calls;
    return oracle(combine(p1, scale(Rational(static_cast<long>(n)), p2)), c1, c2) > 0;
  };
  long long lo = 0;  // largest n known to fail (0 = none tested)
  long long hi = 1;
  while (!wins(hi)) {
    lo = hi;
    if (hi >= n_max) return std::nullopt;
    hi = std::min(hi * 2, n_max);
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (wins(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

AxiomReport check_continuity(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("continuity", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    const SituationSpace space(oracle.m(), 1, cfg.max_voters);
    const long long n = space.size();
    const auto committees = all_committees(oracle);
    const auto pairs = unordered_pairs(committees.size());
    long long missing = 0;
    drive(n * n, cfg, 4, report.stats, [&](long long idx) {
      const auto p1 = space.at(idx / n);
      const auto p2 = space.at(idx % n);
      for (const auto& [a, b] : pairs) {
        const int r2 = ask(p2, committees[a], committees[b]);
        if (r2 == 0) {
          ++report.stats.skipped;
          continue;
        }
        const auto& c1 = r2 > 0 ? committees[a] : committees[b];
        const auto& c2 = r2 > 0 ? committees[b] : committees[a];
        long long calls = 0;
        const auto witness = continuity_witness(oracle, p1, p2, c1, c2, cfg.n_max, &calls);
        report.stats.oracle_calls += calls;
        if (report.stats.oracle_calls > cfg.max_oracle_calls) throw BudgetExhausted{};
        if (!witness) {
          ++missing;
          if (report.notes.size() < 5) {
            report.notes.push_back("no witness n <= " + std::to_string(cfg.n_max) + " for P1 = " +
                                   serialize_profile(p1, oracle.k()) + "P2 = " + serialize_profile(p2, oracle.k()));
          }
        }
      }
      return true;
    });
    if (missing > 0) {
      report.verdict = Verdict::inconclusive;
      report.notes.push_back(std::to_string(missing) + " instance(s) without a witness");
    }
  });
}

AxiomReport check_committee_dominance(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("committee_dominance", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    const SituationSpace space(oracle.m(), 1, cfg.max_voters);
    const auto committees = all_committees(oracle);
    drive(space.size(), cfg, 5, report.stats, [&](long long idx) {
      const auto p = space.at(idx);
      for (const auto& c1 : committees) {
        for (const auto& c2 : committees) {
          bool dom = true;
          for (const auto& [v, q] : p) {
            if (!dominates(position_of_committee(v, c1), position_of_committee(v, c2))) {
              dom = false;
              break;
            }
          }
          if (!dom) continue;
          const int r = ask(p, c1, c2);
          if (r < 0) {
            Counterexample cex;
            cex.axiom = report.axiom;
            cex.c1 = c1;
            cex.c2 = c2;
            cex.observations = {obs("P", p, c1, c2, r)};
            cex.explanation = "C1's positions dominate C2's in every vote, yet C2 is preferred";
            report.counterexample = std::move(cex);
            return false;
          }
        }
      }
      return true;
    });
  });
}

namespace {

// Shared driver for checks of the form outcome(transform(P, l)) == outcome(P).
template <typename Transform>
void invariance_check(AxiomReport& report, Asker& ask, const RuleOracle& oracle, const AxiomConfig& cfg,
                      std::uint64_t salt, const std::string& role, const std::string& why, Transform&& transform) {
  const SituationSpace space(oracle.m(), 1, cfg.max_voters);
  const long long nl = cfg.ell_max;
  if (nl < 1) return;
  const auto committees = all_committees(oracle);
  const auto pairs = unordered_pairs(committees.size());
  long long cached = -1;
  VotingSituation p;
  std::vector<int> base_out;
  drive(space.size() * nl, cfg, salt, report.stats, [&](long long idx) {
    if (idx / nl != cached) {
      cached = idx / nl;
      p = space.at(cached);
      base_out.clear();
      for (const auto& [a, b] : pairs) base_out.push_back(ask(p, committees[a], committees[b]));
    }
    const long long ell = idx % nl + 1;
    const auto tp = transform(p, ell);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const auto& c1 = committees[pairs[t].first];
      const auto& c2 = committees[pairs[t].second];
      const int r = ask(tp, c1, c2);
      if (r != base_out[t]) {
        Counterexample cex;
        cex.axiom = report.axiom;
        cex.c1 = c1;
        cex.c2 = c2;
        cex.multiplier = ell;
        cex.observations = {obs("P", p, c1, c2, base_out[t]), obs(role, tp, c1, c2, r)};
        cex.explanation = why;
        report.counterexample = std::move(cex);
        return false;
      }
    }
    return true;
  });
}

}  // namespace

AxiomReport check_independence_symmetric_profiles(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("independence_of_symmetric_profiles", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    const auto e = null_profile(oracle.m());
    invariance_check(report, ask, oracle, cfg, 6, "P+l*e", "adding copies of the null profile changes the outcome",
                     [&](const VotingSituation& p, long long ell) {
                       return combine(p, scale(Rational(static_cast<long>(ell)), e));
                     });
  });
}

AxiomReport check_homogeneity(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("homogeneity", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    invariance_check(report, ask, oracle, cfg, 7, "l*P", "replicating every voter changes the outcome",
                     [](const VotingSituation& p, long long ell) { return scale(Rational(static_cast<long>(ell)), p); });
  });
}

AxiomReport check_irrelevant_swaps(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("irrelevant_swaps", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    const int m = oracle.m();
    const SituationSpace space(m, 1, cfg.max_voters);
    std::vector<std::pair<int, int>> cand_pairs;
    for (int a = 1; a <= m; ++a) {
      for (int b = a + 1; b <= m; ++b) cand_pairs.emplace_back(a, b);
    }
    if (cand_pairs.empty()) return;
    const long long slots = cfg.max_voters;
    const long long per = slots * static_cast<long long>(cand_pairs.size());
    const auto committees = all_committees(oracle);
    const auto pairs = unordered_pairs(committees.size());
    drive(space.size() * per, cfg, 8, report.stats, [&](long long idx) {
      const auto p = space.at(idx / per);
      const long long slot = (idx % per) / static_cast<long long>(cand_pairs.size());
      const auto [a, b] = cand_pairs[idx % static_cast<long long>(cand_pairs.size())];
      if (slot >= static_cast<long long>(p.support_size())) {
        ++report.stats.skipped;
        return true;
      }
      const Vote v = std::next(p.begin(), slot)->first;
      VotingSituation swapped = p;
      swapped.add(v, -1);
      swapped.add(swap_in_vote(v, a, b), 1);
      for (const auto& [x, y] : pairs) {
        const auto& c1 = committees[x];
        const auto& c2 = committees[y];
        if (!swap_eligible(c1, c2, a, b)) continue;
        const int r0 = ask(p, c1, c2);
        const int r1 = ask(swapped, c1, c2);
        if (r0 != r1) {
          Counterexample cex;
          cex.axiom = report.axiom;
          cex.c1 = c1;
          cex.c2 = c2;
          cex.swapped = std::make_pair(a, b);
          cex.edited_vote = v;
          cex.observations = {obs("P", p, c1, c2, r0), obs("P[v,a<->b]", swapped, c1, c2, r1)};
          cex.explanation = "swapping two candidates of the same class in one vote changes the outcome";
          report.counterexample = std::move(cex);
          return false;
        }
      }
      return true;
    });
  });
}

AxiomReport check_antisymmetry(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return run_checker("antisymmetry", oracle, cfg, [&](AxiomReport& report, Asker& ask) {
    const SituationSpace space(oracle.m(), 1, cfg.max_voters);
    const auto committees = all_committees(oracle);
    drive(space.size(), cfg, 9, report.stats, [&](long long idx) {
      const auto p = space.at(idx);
      for (std::size_t a = 0; a < committees.size(); ++a) {
        for (std::size_t b = a; b < committees.size(); ++b) {
          const auto& c1 = committees[a];
          const auto& c2 = committees[b];
          const int r12 = ask(p, c1, c2);
          const int r21 = a == b ? r12 : ask(p, c2, c1);
          if (r12 != -r21) {
            Counterexample cex;
            cex.axiom = report.axiom;
            cex.c1 = c1;
            cex.c2 = c2;
            cex.observations = {obs("P", p, c1, c2, r12), obs("P", p, c2, c1, r21)};
            cex.explanation = "comparator is not antisymmetric";
            report.counterexample = std::move(cex);
            return false;
          }
        }
      }
      return true;
    });
  });
}

std::vector<AxiomReport> run_suite(const RuleOracle& oracle, const AxiomConfig& cfg) {
  return {check_antisymmetry(oracle, cfg),
          check_anonymity(oracle, cfg),
          check_neutrality(oracle, cfg),
          check_consistency(oracle, cfg),
          check_continuity(oracle, cfg),
          check_committee_dominance(oracle, cfg),
          check_independence_symmetric_profiles(oracle, cfg),
          check_homogeneity(oracle, cfg),
          check_irrelevant_swaps(oracle, cfg)};
}

Verdict summarize(const std::vector<AxiomReport>& reports) {
  Verdict out = Verdict::pass;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::fail) return Verdict::fail;
    if (r.verdict == Verdict::inconclusive) out = Verdict::inconclusive;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent confirmation. Everything below works on re-parsed text and
// recomputes the relations between situations with local helpers only.

namespace {

using Counts = std::map<std::vector<int>, Rational>;

Counts reparse(const VotingSituation& p, int k) {
  const auto parsed = parse_profile(serialize_profile(p, k));
  Counts out;
  for (const auto& [v, q] : parsed.situation) out[v.order()] = q;
  return out;
}

VotingSituation to_situation(int m, const Counts& c) {
  VotingSituation p(m);
  for (const auto& [order, q] : c) p.add(Vote(order), q);
  return p;
}

void add_count(Counts& c, const std::vector<int>& order, const Rational& q) {
  c[order] += q;
  if (c[order].is_zero()) c.erase(order);
}

int rank_in(const std::vector<int>& order, int cand) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == cand) return static_cast<int>(i) + 1;
  }
  return -1;
}

std::vector<int> ranks_of(const std::vector<int>& order, const Committee& c) {
  std::vector<int> r;
  for (int a : c) r.push_back(rank_in(order, a));
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

std::string confirm_counterexample(const RuleOracle& oracle, const Counterexample& cex) {
  const int m = oracle.m();
  const int k = oracle.k();
  std::vector<Counts> parsed;
  std::vector<int> outcome;
  for (const auto& o : cex.observations) {
    parsed.push_back(reparse(o.situation, k));
    const int r = oracle(to_situation(m, parsed.back()), o.c1, o.c2);
    if (r != o.outcome) return "re-evaluation of '" + o.role + "' gave a different outcome";
    outcome.push_back(r);
  }
  const auto& ax = cex.axiom;
  if (ax == "anonymity") {
    if (cex.profiles.size() != 2) return "anonymity witness needs two profiles";
    std::vector<std::vector<int>> va;
    std::vector<std::vector<int>> vb;
    for (const auto& b : cex.profiles[0].first.ballots()) va.push_back(b.vote.order());
    for (const auto& b : cex.profiles[1].first.ballots()) vb.push_back(b.vote.order());
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return "profiles are not voter permutations of each other";
    const int r1 = oracle.on_profile(cex.profiles[0].first, cex.c1, cex.c2);
    const int r2 = oracle.on_profile(cex.profiles[1].first, cex.c1, cex.c2);
    return r1 != r2 ? "" : "outcomes agree on re-evaluation";
  }
  if (ax == "antisymmetry") {
    if (outcome.size() != 2 || parsed[0] != parsed[1]) return "antisymmetry witness malformed";
    return outcome[0] != -outcome[1] ? "" : "outcomes are antisymmetric";
  }
  if (ax == "neutrality") {
    if (!cex.sigma || outcome.size() != 2) return "neutrality witness malformed";
    const auto& img = cex.sigma->images();
    Counts expect;
    for (const auto& [order, q] : parsed[0]) {
      std::vector<int> mapped;
      for (int c : order) mapped.push_back(img[c - 1]);
      add_count(expect, mapped, q);
    }
    if (expect != parsed[1]) return "second situation is not sigma applied to the first";
    std::vector<int> s1;
    std::vector<int> s2;
    for (int c : cex.c1) s1.push_back(img[c - 1]);
    for (int c : cex.c2) s2.push_back(img[c - 1]);
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != cex.observations[1].c1 || s2 != cex.observations[1].c2) return "committees not relabeled by sigma";
    return outcome[0] != outcome[1] ? "" : "outcomes agree on re-evaluation";
  }
  if (ax == "consistency") {
    if (outcome.size() != 3) return "consistency witness malformed";
    Counts sum = parsed[0];
    for (const auto& [order, q] : parsed[1]) add_count(sum, order, q);
    if (sum != parsed[2]) return "third situation is not the union of the first two";
    if (parsed[0].empty() || parsed[1].empty()) return "empty part";
    const int x1 = outcome[0];
    const int x2 = outcome[1];
    const int x = outcome[2];
    if (x1 < 0 || x2 < 0) return "premise does not hold";
    const bool violated = x < 0 || ((x1 > 0 || x2 > 0) && x == 0);
    return violated ? "" : "union outcome satisfies the axiom";
  }
  if (ax == "committee_dominance") {
    if (outcome.size() != 1) return "dominance witness malformed";
    for (const auto& [order, q] : parsed[0]) {
      const auto r1 = ranks_of(order, cex.c1);
      const auto r2 = ranks_of(order, cex.c2);
      for (std::size_t t = 0; t < r1.size(); ++t) {
        if (r1[t] > r2[t]) return "C1 does not dominate C2 in every vote";
      }
    }
    return outcome[0] < 0 ? "" : "C1 is not beaten";
  }
  if (ax == "independence_of_symmetric_profiles" || ax == "homogeneity") {
    if (!cex.multiplier || outcome.size() != 2) return "witness malformed";
    const Rational ell(static_cast<long>(*cex.multiplier));
    Counts expect;
    if (ax == "homogeneity") {
      for (const auto& [order, q] : parsed[0]) add_count(expect, order, ell * q);
    } else {
      expect = parsed[0];
      std::vector<int> order(m);
      for (int i = 0; i < m; ++i) order[i] = i + 1;
      do {
        add_count(expect, order, ell);
      } while (std::next_permutation(order.begin(), order.end()));
    }
    if (expect != parsed[1]) return "second situation does not match the transformation";
    return outcome[0] != outcome[1] ? "" : "outcomes agree on re-evaluation";
  }
  if (ax == "irrelevant_swaps") {
    if (!cex.swapped || !cex.edited_vote || outcome.size() != 2) return "swap witness malformed";
    const auto [a, b] = *cex.swapped;
    const bool a1 = std::count(cex.c1.begin(), cex.c1.end(), a) > 0;
    const bool a2 = std::count(cex.c2.begin(), cex.c2.end(), a) > 0;
    const bool b1 = std::count(cex.c1.begin(), cex.c1.end(), b) > 0;
    const bool b2 = std::count(cex.c2.begin(), cex.c2.end(), b) > 0;
    if (a1 != b1 || a2 != b2) return "swapped candidates are not in the same class";
    const auto& v = cex.edited_vote->order();
    if (parsed[0].count(v) == 0) return "edited vote does not occur in P";
    std::vector<int> w = v;
    std::swap(w[rank_in(v, a) - 1], w[rank_in(v, b) - 1]);
    Counts expect = parsed[0];
    add_count(expect, v, -1);
    add_count(expect, w, 1);
    if (expect != parsed[1]) return "second situation is not the single-vote swap";
    return outcome[0] != outcome[1] ? "" : "outcomes agree on re-evaluation";
  }
  return "axiom '" + ax + "' has no refutable counterexample form";
}

}  // namespace csr
