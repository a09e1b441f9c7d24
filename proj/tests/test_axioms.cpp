#include <doctest.h>

#include <algorithm>

#include "csr/axioms.hpp"
#include "csr/errors.hpp"
#include "csr/oracle.hpp"
#include "csr/scoring.hpp"
#include "test_support.hpp"

using namespace csr;
using testing::set_of;
using testing::situation_of;
using testing::SplitMix;
using testing::vote_of;

namespace {

AxiomConfig small_config(std::uint64_t seed = 1) {
  AxiomConfig cfg;
  cfg.seed = seed;
  cfg.max_voters = 2;
  cfg.pair_max_voters = 2;
  cfg.samples = 300;
  cfg.n_max = 200;
  cfg.ell_max = 2;
  return cfg;
}

const Counterexample::Observation& find_role(const Counterexample& cex, const std::string& role) {
  const auto it = std::find_if(cex.observations.begin(), cex.observations.end(),
                               [&](const auto& o) { return o.role == role; });
  REQUIRE(it != cex.observations.end());
  return *it;
}

bool natural(const VotingSituation& p) {
  for (const auto& [v, q] : p)
    if (!(q > Rational(0)) || !q.is_integer()) return false;
  return true;
}

// Restates the consistency condition on fresh oracle answers.
bool violates_consistency(const RuleOracle& oracle, const Counterexample& cex) {
  const auto& p = find_role(cex, "P").situation;
  const auto& q = find_role(cex, "P'").situation;
  const auto& pq = find_role(cex, "P+P'").situation;
  if (!natural(p) || !natural(q) || p.is_zero() || q.is_zero()) return false;
  if (!(combine(p, q) == pq)) return false;
  const int a = oracle(p, cex.c1, cex.c2);
  const int b = oracle(q, cex.c1, cex.c2);
  const int ab = oracle(pq, cex.c1, cex.c2);
  if (a < 0 || b < 0) return false;
  return (a > 0 || b > 0) ? ab != 1 : ab < 0;
}

RuleOracle table_oracle(std::vector<Rational> table, int m, int k) {
  return scoring_oracle(CommitteeScoringFunction(m, k, std::move(table)));
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::pass) == "pass");
  CHECK(to_string(Verdict::fail) == "fail");
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
  AxiomReport a, b;
  b.verdict = Verdict::inconclusive;
  CHECK(summarize({a, b}) == Verdict::inconclusive);
  b.verdict = Verdict::fail;
  CHECK(summarize({a, b}) == Verdict::fail);
  CHECK(summarize({a, a}) == Verdict::pass);
}

TEST_CASE("builtins pass the whole suite at m = 3") {
  for (int k = 1; k <= 2; ++k) {
    for (const auto& name : builtin_names()) {
      const auto oracle = scoring_oracle(builtin(name, 3, k));
      const auto reports = run_suite(oracle, small_config());
      for (const auto& r : reports) CHECK_MESSAGE(r.verdict == Verdict::pass, name << " k=" << k << " " << r.axiom);
    }
  }
}

TEST_CASE("the trivial rule passes everything") {
  const auto reports = run_suite(trivial_oracle(3, 2), small_config());
  CHECK(summarize(reports) == Verdict::pass);
}

TEST_CASE("neutrality on m = 4, k = 2 builtins") {
  for (const auto& name : builtin_names()) {
    auto cfg = small_config(3);
    cfg.exhaustive_limit = 0;
    cfg.samples = 20;
    CHECK(check_neutrality(scoring_oracle(builtin(name, 4, 2)), cfg).verdict == Verdict::pass);
  }
}

TEST_CASE("anonymity fails for a first-voter dictator") {
  const auto oracle = first_voter_oracle(3, 1);
  const auto r = check_anonymity(oracle, small_config());
  REQUIRE(r.verdict == Verdict::fail);
  REQUIRE(r.counterexample.has_value());
  const auto& cex = *r.counterexample;
  REQUIRE(cex.profiles.size() == 2);
  // Same multiset of votes, different outcomes.
  CHECK(cex.profiles[0].first.to_situation() == cex.profiles[1].first.to_situation());
  CHECK(oracle.on_profile(cex.profiles[0].first, cex.c1, cex.c2) !=
        oracle.on_profile(cex.profiles[1].first, cex.c1, cex.c2));
  CHECK(confirm_counterexample(oracle, cex).empty());
}

TEST_CASE("single-voter profiles cannot break anonymity") {
  auto cfg = small_config();
  cfg.max_voters = 1;
  CHECK(check_anonymity(first_voter_oracle(3, 1), cfg).verdict == Verdict::pass);
}

TEST_CASE("neutrality fails when candidate 1 is favoured") {
  const auto oracle = favor_candidate_oracle(3, 1);
  const auto r = check_neutrality(oracle, small_config());
  REQUIRE(r.verdict == Verdict::fail);
  const auto& cex = *r.counterexample;
  REQUIRE(cex.sigma.has_value());
  const auto& p = find_role(cex, "P");
  const auto& sp = find_role(cex, "sigma(P)");
  CHECK(sp.situation == apply_permutation(*cex.sigma, p.situation));
  CHECK(sp.c1 == apply_permutation(*cex.sigma, p.c1));
  CHECK(oracle(p.situation, p.c1, p.c2) != oracle(sp.situation, sp.c1, sp.c2));
  CHECK(confirm_counterexample(oracle, cex).empty());
}

TEST_CASE("leximax breaks consistency with a re-checkable witness") {
  const auto oracle = leximax_oracle(3, 2);
  const auto r = check_consistency(oracle, small_config(7));
  REQUIRE(r.verdict == Verdict::fail);
  REQUIRE(r.counterexample.has_value());
  CHECK(violates_consistency(oracle, *r.counterexample));
  CHECK(confirm_counterexample(oracle, *r.counterexample).empty());
}

TEST_CASE("consistency passes for builtins with all pairs of small profiles") {
  for (int k = 1; k <= 2; ++k)
    for (const auto& name : {"k-borda", "pav", "sntv"}) {
      const auto r = check_consistency(scoring_oracle(builtin(name, 3, k)), small_config());
      CHECK(r.verdict == Verdict::pass);
      CHECK(r.stats.exhaustive);
    }
}

TEST_CASE("continuity witness") {
  const auto oracle = scoring_oracle(builtin("k-borda", 3, 1));
  const auto p1 = situation_of(3, {{"bac", 5}});
  const auto p2 = situation_of(3, {{"abc", 1}});
  CHECK(continuity_witness(oracle, p1, p2, {1}, {2}, 1000) == 6);
  CHECK_FALSE(continuity_witness(oracle, p1, p2, {1}, {2}, 5).has_value());
}

TEST_CASE("continuity witnesses respect the score-gap bound") {
  // For a scoring rule the n-th instance has margin gap(P1) + n*gap(P2);
  // the smallest winning n is floor(-gap1/gap2) + 1 when gap1 <= 0.
  SplitMix gen(51);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = gen.between(2, 4);
    const int k = gen.between(1, m - 1);
    const auto lambda = builtin("k-borda", m, k);
    const auto oracle = scoring_oracle(lambda);
    const auto c1 = gen.committee(m, k);
    const auto c2 = gen.committee(m, k);
    const auto p1 = gen.situation(m, gen.between(1, 10));
    const auto p2 = gen.situation(m, gen.between(1, 3));
    const Rational g1 = committee_score(lambda, c1, p1) - committee_score(lambda, c2, p1);
    const Rational g2 = committee_score(lambda, c1, p2) - committee_score(lambda, c2, p2);
    if (!(g2 > Rational(0))) continue;
    long long expected = 1;
    while (!(g1 + Rational(static_cast<long>(expected)) * g2 > Rational(0))) ++expected;
    CHECK(continuity_witness(oracle, p1, p2, c1, c2, 1000) == expected);
  }
}

TEST_CASE("committee dominance fails for a non-monotone table") {
  const auto oracle = table_oracle({Rational(0), Rational(1), Rational(0)}, 3, 2);
  const auto r = check_committee_dominance(oracle, small_config());
  REQUIRE(r.verdict == Verdict::fail);
  const auto& cex = *r.counterexample;
  const auto& p = find_role(cex, "P");
  CHECK(p.situation == situation_of(3, {{"abc", 1}}));
  CHECK(cex.c1 == set_of("ab"));
  CHECK(cex.c2 == set_of("ac"));
  CHECK(oracle(p.situation, cex.c1, cex.c2) == -1);
  CHECK(confirm_counterexample(oracle, cex).empty());
}

TEST_CASE("committee dominance holds for builtins on single votes, m = 4, k = 2") {
  auto cfg = small_config();
  cfg.max_voters = 1;
  for (const auto& name : builtin_names())
    CHECK(check_committee_dominance(scoring_oracle(builtin(name, 4, 2)), cfg).verdict == Verdict::pass);
}

TEST_CASE("homogeneity fails for an absolute threshold") {
  const auto oracle = absolute_threshold_oracle(3, 1);
  const auto r = check_homogeneity(oracle, small_config());
  REQUIRE(r.verdict == Verdict::fail);
  const auto& cex = *r.counterexample;
  REQUIRE(cex.multiplier.has_value());
  const auto& p = find_role(cex, "P");
  const auto& lp = find_role(cex, "l*P");
  CHECK(lp.situation == scale(Rational(static_cast<long>(*cex.multiplier)), p.situation));
  CHECK(oracle(p.situation, cex.c1, cex.c2) != oracle(lp.situation, cex.c1, cex.c2));
  CHECK(confirm_counterexample(oracle, cex).empty());
}

TEST_CASE("symmetric profiles do not matter to builtins") {
  for (const auto& name : builtin_names())
    CHECK(check_independence_symmetric_profiles(scoring_oracle(builtin(name, 3, 1)), small_config()).verdict ==
          Verdict::pass);
  CHECK(check_independence_symmetric_profiles(first_voter_oracle(3, 1), small_config()).verdict == Verdict::fail);
}

TEST_CASE("irrelevant swaps leave builtin outcomes unchanged, m = 4, k = 2") {
  auto cfg = small_config();
  cfg.max_voters = 1;
  for (const auto& name : builtin_names()) {
    const auto r = check_irrelevant_swaps(scoring_oracle(builtin(name, 4, 2)), cfg);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.stats.instances > 0);
  }
}

TEST_CASE("antisymmetry") {
  CHECK(check_antisymmetry(scoring_oracle(builtin("cc", 3, 2)), small_config()).verdict == Verdict::pass);
  const RuleOracle lopsided("lopsided", 3, 1, [](const VotingSituation&, const Committee&, const Committee&) {
    return 1;
  });
  CHECK(check_antisymmetry(lopsided, small_config()).verdict == Verdict::fail);
}

TEST_CASE("tiny call budgets give inconclusive verdicts") {
  auto cfg = small_config();
  cfg.max_oracle_calls = 5;
  CHECK(check_consistency(scoring_oracle(builtin("k-borda", 3, 1)), cfg).verdict == Verdict::inconclusive);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const auto oracle = leximax_oracle(3, 2);
  const auto a = check_consistency(oracle, small_config(9));
  const auto b = check_consistency(oracle, small_config(9));
  REQUIRE(a.counterexample.has_value());
  REQUIRE(b.counterexample.has_value());
  CHECK(a.counterexample->observations.size() == b.counterexample->observations.size());
  for (std::size_t i = 0; i < a.counterexample->observations.size(); ++i)
    CHECK(a.counterexample->observations[i].situation == b.counterexample->observations[i].situation);
  CHECK(a.stats.oracle_calls == b.stats.oracle_calls);
}

TEST_CASE("confirmation rejects doctored counterexamples") {
  const auto oracle = leximax_oracle(3, 2);
  auto r = check_consistency(oracle, small_config(7));
  REQUIRE(r.counterexample.has_value());
  auto cex = *r.counterexample;
  cex.observations.back().outcome = -cex.observations.back().outcome + (cex.observations.back().outcome == 0 ? 1 : 0);
  CHECK_FALSE(confirm_counterexample(oracle, cex).empty());
  // The k-Borda rule gives a consistent answer on the same situations.
  CHECK_FALSE(confirm_counterexample(scoring_oracle(builtin("k-borda", 3, 2)), *r.counterexample).empty());
}
