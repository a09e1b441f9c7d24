#include "csr/oracle.hpp"

#include <algorithm>

#include "csr/errors.hpp"

namespace csr {

namespace {

// Total Borda score of every candidate, indexed by id - 1.
std::vector<Rational> borda_totals(const VotingSituation& p) {
  std::vector<Rational> totals(p.m());
  for (const auto& [v, q] : p) {
    for (int r = 1; r <= p.m(); ++r) totals[v.at(r) - 1] += q * Rational(p.m() - r);
  }
  return totals;
}

int sign_of(const Rational& a, const Rational& b) { return (a - b).sign(); }

int kborda_single_vote(const Vote& v, const Committee& c1, const Committee& c2) {
  long s = 0;
  for (int a : c1) s -= v.rank_of(a);
  for (int a : c2) s += v.rank_of(a);
  return (s > 0) - (s < 0);
}

}  // namespace

RuleOracle::RuleOracle(std::string label, int m, int k, SituationFn on_situation, ProfileFn on_profile,
                       bool thread_safe)
    : label_(std::move(label)),
      m_(m),
      k_(k),
      on_situation_(std::move(on_situation)),
      on_profile_(std::move(on_profile)),
      thread_safe_(thread_safe) {
  if (k < 1 || k > m) throw DomainError("oracle requires 1 <= k <= m");
}

int RuleOracle::operator()(const VotingSituation& p, const Committee& c1, const Committee& c2) const {
  if (p.m() != m_) throw DomainError("oracle: m mismatch");
  return on_situation_(p, c1, c2);
}

int RuleOracle::on_profile(const Profile& p, const Committee& c1, const Committee& c2) const {
  if (p.m() != m_) throw DomainError("oracle: m mismatch");
  if (on_profile_) return on_profile_(p, c1, c2);
  return on_situation_(p.to_situation(), c1, c2);
}

RuleOracle scoring_oracle(const CommitteeScoringFunction& lambda) {
  return RuleOracle(lambda.label(), lambda.m(), lambda.k(),
                    [lambda](const VotingSituation& p, const Committee& c1, const Committee& c2) {
                      return compare(lambda, c1, c2, p);
                    });
}

RuleOracle decision_oracle(const DecisionScoringFunction& d) {
  return RuleOracle(d.label(), d.m(), d.k(),
                    [d](const VotingSituation& p, const Committee& c1, const Committee& c2) {
                      return decide(d, c1, c2, p);
                    });
}

RuleOracle trivial_oracle(int m, int k) {
  return RuleOracle("trivial", m, k, [](const VotingSituation&, const Committee&, const Committee&) { return 0; });
}

RuleOracle leximax_oracle(int m, int k) {
  return RuleOracle("leximax", m, k, [](const VotingSituation& p, const Committee& c1, const Committee& c2) {
    const auto totals = borda_totals(p);
    auto sorted_scores = [&](const Committee& c) {
      std::vector<Rational> s;
      for (int a : c) s.push_back(totals[a - 1]);
      std::sort(s.begin(), s.end(), std::greater<>());
      return s;
    };
    const auto s1 = sorted_scores(c1);
    const auto s2 = sorted_scores(c2);
    if (s1.front() != s2.front()) return sign_of(s1.front(), s2.front());
    for (int a : c1) {
      if (totals[a - 1] == s1.front() && std::binary_search(c2.begin(), c2.end(), a)) return 0;
    }
    for (std::size_t i = 1; i < s1.size(); ++i) {
      if (s1[i] != s2[i]) return sign_of(s1[i], s2[i]);
    }
    return 0;
  });
}

RuleOracle first_voter_oracle(int m, int k) {
  return RuleOracle(
      "first-voter", m, k,
      [](const VotingSituation& p, const Committee& c1, const Committee& c2) {
        if (p.is_zero()) return 0;
        return kborda_single_vote(p.begin()->first, c1, c2);
      },
      [](const Profile& p, const Committee& c1, const Committee& c2) {
        if (p.size() == 0) return 0;
        const auto first = std::min_element(p.ballots().begin(), p.ballots().end(),
                                            [](const auto& a, const auto& b) { return a.voter < b.voter; });
        return kborda_single_vote(first->vote, c1, c2);
      });
}

RuleOracle favor_candidate_oracle(int m, int k) {
  const auto borda = builtin("k-borda", m, k);
  return RuleOracle("favor-first", m, k, [borda](const VotingSituation& p, const Committee& c1, const Committee& c2) {
    const bool h1 = std::binary_search(c1.begin(), c1.end(), 1);
    const bool h2 = std::binary_search(c2.begin(), c2.end(), 1);
    if (h1 != h2) return h1 ? 1 : -1;
    return compare(borda, c1, c2, p);
  });
}

RuleOracle absolute_threshold_oracle(int m, int k) {
  const auto borda = builtin("k-borda", m, k);
  return RuleOracle("threshold", m, k, [borda](const VotingSituation& p, const Committee& c1, const Committee& c2) {
    const Rational diff = committee_score(borda, c1, p) - committee_score(borda, c2, p);
    if (diff >= Rational(2)) return 1;
    if (diff <= Rational(-2)) return -1;
    return 0;
  });
}

const std::vector<std::string>& extra_oracle_names() {
  static const std::vector<std::string> names = {"majority", "leximax", "trivial", "first-voter", "favor-first",
                                                 "threshold"};
  return names;
}

std::optional<RuleOracle> named_oracle(std::string_view name, int m, int k) {
  if (name == "majority") return decision_oracle(majority(m, k));
  if (name == "leximax") return leximax_oracle(m, k);
  if (name == "trivial") return trivial_oracle(m, k);
  if (name == "first-voter") return first_voter_oracle(m, k);
  if (name == "favor-first") return favor_candidate_oracle(m, k);
  if (name == "threshold") return absolute_threshold_oracle(m, k);
  std::optional<int> t;
  std::string_view base = name;
  if (name.substr(0, 4) == "pav:") {
    base = "pav";
    try {
      t = std::stoi(std::string(name.substr(4)));
    } catch (const std::exception&) {
      throw DomainError("malformed PAV parameter in '" + std::string(name) + "'");
    }
  }
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), base) == names.end()) return std::nullopt;
  return scoring_oracle(builtin(base, m, k, t));
}

}  // namespace csr
