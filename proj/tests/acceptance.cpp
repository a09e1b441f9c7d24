// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "csr/axioms.hpp"
#include "csr/combinat.hpp"
#include "csr/decision.hpp"
#include "csr/kernel_basis.hpp"
#include "csr/linalg.hpp"
#include "csr/oracle.hpp"
#include "csr/profile_io.hpp"
#include "csr/random.hpp"
#include "csr/recovery.hpp"
#include "csr/scoring.hpp"

using namespace csr;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
class Failures {
 public:
  void add(const std::string& msg) {
    ++count_;
    if (count_ <= 5) out_ << (count_ > 1 ? "; " : "") << msg;
  }
  Outcome result(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    std::ostringstream s;
    s << count_ << " problem(s): " << out_.str();
    return {false, s.str()};
  }

 private:
  int count_ = 0;
  std::ostringstream out_;
};

Committee first_k(int k) {
  Committee c;
  for (int x = 1; x <= k; ++x) c.push_back(x);
  return c;
}

Committee neighbour(int k) {
  auto c = first_k(k);
  c.back() = k + 1;
  return c;
}

CommitteePosition range(int lo, int hi) {
  CommitteePosition out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

std::string shape(int m, int k) { return "(" + std::to_string(m) + "," + std::to_string(k) + ")"; }

// Every builtin, with PAV at each approval depth.
std::vector<std::pair<std::string, CommitteeScoringFunction>> builtin_family(int m, int k) {
  std::vector<std::pair<std::string, CommitteeScoringFunction>> out;
  for (const auto& name : builtin_names()) {
    if (name == "pav") {
      for (int t = 1; t <= k; ++t) out.emplace_back("pav:" + std::to_string(t), builtin(name, m, k, t));
    } else {
      out.emplace_back(name, builtin(name, m, k));
    }
  }
  return out;
}

const std::vector<std::pair<int, int>> kernel_shapes = {{3, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 2}};

Outcome axiom_sweep() {
  Failures f;
  int runs = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int m = 2; m <= 4; ++m) {
    for (int k = 1; k <= std::min(3, m - 1); ++k) {
      for (const auto& [name, lambda] : builtin_family(m, k)) {
        AxiomConfig cfg;
        cfg.seed = 1;
        const auto reports = run_suite(scoring_oracle(lambda), cfg);
        ++runs;
        for (const auto& r : reports) {
          if (r.verdict == Verdict::fail) f.add(name + shape(m, k) + " fails " + r.axiom);
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 300) f.add("took " + std::to_string(secs) + " s");
  return f.result(std::to_string(runs) + " rule/shape suites, 0 failures, " + std::to_string(static_cast<int>(secs)) +
                  " s");
}

Outcome leximax_failure() {
  AxiomConfig cfg;
  cfg.seed = 1;
  const auto oracle = leximax_oracle(3, 2);
  for (const auto& r : run_suite(oracle, cfg)) {
    if (r.verdict != Verdict::fail || !r.counterexample) continue;
    const auto why = confirm_counterexample(oracle, *r.counterexample);
    if (why.empty()) return {true, "confirmed " + r.axiom + " violation"};
  }
  return {false, "no confirmed failure"};
}

Outcome johnson_paths() {
  Failures f;
  int paths = 0;
  const auto all = [](const CommitteePosition&) { return true; };
  for (int p = 1; p <= 7; ++p) {
    for (int j = 1; j <= p; ++j) {
      const auto c = verify_hamiltonian(johnson_path(j, p), j, p, all, range(1, j), range(p - j + 1, p));
      ++paths;
      if (!c.ok) f.add("J(" + std::to_string(p) + "," + std::to_string(j) + "): " + c.message);
      if (j == p) continue;
      for (int r = 2; r <= p; ++r) {
        const auto below = [r](const CommitteePosition& s) { return s.front() < r; };
        const auto cr = verify_hamiltonian(johnson_path_restricted(j, p, r), j, p, below, range(1, j));
        ++paths;
        if (!cr.ok) f.add("restricted (" + std::to_string(j) + "," + std::to_string(p) + "," + std::to_string(r) + "): " + cr.message);
      }
    }
  }
  return f.result(std::to_string(paths) + " paths valid");
}

Outcome alpha_dimensions() {
  Failures f;
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = static_cast<int>(rng.between(2, 6));
    const int k = static_cast<int>(rng.between(1, m));
    const auto p = rng.situation(m, static_cast<int>(rng.between(1, 10)));
    const auto perm1 = rng.permutation(m);
    const auto perm2 = rng.permutation(m);
    const auto c1 = apply_permutation(perm1, first_k(k));
    const auto c2 = apply_permutation(perm2, first_k(k));
    Rational sum;
    for (const auto& x : alpha(c1, c2, p)) sum += x;
    if (sum != Rational(0)) f.add("alpha sum " + sum.to_string() + " at trial " + std::to_string(trial));
  }
  for (const auto& [m, k] : kernel_shapes) {
    const auto c1 = first_k(k);
    const auto c2 = neighbour(k);
    const VoteIndex index(m);
    const auto mat = alpha_matrix(m, c1, c2, index);
    const long long r = static_cast<long long>(rank(mat));
    const long long nullity = static_cast<long long>(nullspace(mat).size());
    if (r != binomial(m, k) - 1) f.add("rank " + std::to_string(r) + " at " + shape(m, k));
    if (nullity != factorial(m) - binomial(m, k) + 1) f.add("nullity " + std::to_string(nullity) + " at " + shape(m, k));
    const auto basis = kernel_basis_symmetric(m, c1, c2);
    if (static_cast<long long>(basis.elements.size()) != factorial(m) - binomial(m, k) + 1) {
      f.add("basis size " + std::to_string(basis.elements.size()) + " at " + shape(m, k));
    }
    if (k >= 2) {
      if (static_cast<long long>(basis.insert_count) != expected_insert_count(m, k)) f.add("|B1| at " + shape(m, k));
      if (static_cast<long long>(basis.distinctive_count) != expected_distinctive_count(m, k)) {
        f.add("|B2| at " + shape(m, k));
      }
    }
    std::vector<RationalVector> vectors;
    for (const auto& e : basis.elements) vectors.push_back(index.to_vector(e.situation));
    if (static_cast<long long>(rank_of_vectors(vectors, index.size())) != factorial(m) - binomial(m, k) + 1) {
      f.add("basis not independent at " + shape(m, k));
    }
  }
  return f.result("1000 alpha sums zero; rank, nullity, |B1|, |B2| match on 5 shapes");
}

Outcome basis_elements() {
  Failures f;
  std::size_t checked = 0;
  for (const auto& [m, k] : kernel_shapes) {
    const auto c1 = first_k(k);
    const auto c2 = neighbour(k);
    const auto family = builtin_family(m, k);
    for (const auto& e : kernel_basis_symmetric(m, c1, c2).elements) {
      ++checked;
      if (!verify_symmetric_situation(e, c1, c2)) f.add("witness fails at " + shape(m, k));
      for (const auto& x : alpha(c1, c2, e.situation)) {
        if (x != Rational(0)) {
          f.add("element outside the kernel at " + shape(m, k));
          break;
        }
      }
      for (const auto& [name, lambda] : family) {
        if (committee_score(lambda, c1, e.situation) != committee_score(lambda, c2, e.situation)) {
          f.add(name + " separates an element at " + shape(m, k));
        }
      }
    }
  }
  return f.result(std::to_string(checked) + " elements verified");
}

Outcome recovery_round_trip() {
  Failures f;
  int runs = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int m = 2; m <= 5; ++m) {
    for (int k = 1; k <= std::min(3, m - 1); ++k) {
      for (const auto& [name, lambda] : builtin_family(m, k)) {
        const std::string tag = name + shape(m, k);
        RecoveryOptions options;
        options.seed = 7;
        options.situations = 200;
        const auto result = recover_scoring(scoring_oracle(lambda), 64, options);
        ++runs;
        const auto& deltas = result.deltas;
        if (!deltas.gauge) {
          f.add(tag + " has no gauge");
          continue;
        }
        const auto& g = *deltas.gauge;
        const auto& unit = deltas.at(g.i1_star, g.i2_star);
        if (!unit.is_exact() || *unit.exact != Rational(1)) f.add(tag + " gauge delta " + unit.to_string());
        for (const auto& [key, value] : deltas.entries) {
          const auto& back = deltas.at(key.second, key.first);
          if (!value.is_exact() || !back.is_exact() || *value.exact != -*back.exact) {
            f.add(tag + " antisymmetry at " + format_positions(key.first) + "|" + format_positions(key.second));
          }
        }
        for (const auto& r : result.scoring.residuals) {
          if (r.value != Rational(0)) f.add(tag + " residual " + r.value.to_string());
        }
        if (!(result.scoring.lambda == normalize_scoring(lambda, deltas.gauge))) f.add(tag + " table differs");
        const auto& v = result.verification;
        if (!v.passed()) f.add(tag + " " + std::to_string(v.all_pairs.mismatches) + " mismatches");
        if (v.all_pairs.situations != 200) f.add(tag + " verified on " + std::to_string(v.all_pairs.situations));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 600) f.add("took " + std::to_string(secs) + " s");
  return f.result(std::to_string(runs) + " round trips exact, 0 mismatches, " + std::to_string(static_cast<int>(secs)) +
                  " s");
}

Outcome majority_cycle() {
  const auto d = majority(3);
  VotingSituation cycle(3);
  cycle.add(Vote({1, 2, 3}), 1);
  cycle.add(Vote({2, 3, 1}), 1);
  cycle.add(Vote({3, 1, 2}), 1);
  const auto found = find_intransitivity(d, cycle, {{1}, {2}, {3}});
  if (!found) return {false, "no 3-cycle on the Condorcet profile"};
  const auto table = estimate_delta_table(decision_oracle(d), 64);
  try {
    integrate_lambda(table, 3, 1);
  } catch (const InconsistentOracleError& e) {
    for (const auto& r : e.partial().residuals) {
      if (r.value != Rational(0)) {
        return {true, "3-cycle found; residual " + r.value.to_string() + " at " + format_positions(r.i) + "|" +
                          format_positions(r.j)};
      }
    }
    return {false, "inconsistency reported without a nonzero residual"};
  }
  return {false, "integration accepted the majority relation"};
}

Outcome affine_invariance() {
  Failures f;
  int cases = 0;
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 3}}) {
    for (const auto& [name, lambda] : builtin_family(m, k)) {
      const auto shifted = affine_transform(lambda, Rational(3), Rational(7));
      const auto a = recover_scoring(scoring_oracle(lambda), 64).scoring.lambda;
      const auto b = recover_scoring(scoring_oracle(shifted), 64).scoring.lambda;
      if (!(a == b)) f.add(name + shape(m, k) + " normalized tables differ");
      const auto committees = enumerate_positions(m, k);
      Rng rng(99);
      for (int s = 0; s < 100; ++s) {
        const auto p = rng.situation(m, static_cast<int>(rng.between(1, 12)));
        for (const auto& c1 : committees)
          for (const auto& c2 : committees)
            if (compare(lambda, c1, c2, p) != compare(shifted, c1, c2, p)) {
              f.add(name + shape(m, k) + " verdicts differ");
            }
      }
      ++cases;
    }
  }
  return f.result(std::to_string(cases) + " rules: identical tables and verdicts on 100 situations");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite: builtins, m <= 4, k <= min(3, m-1), zero failures under 5 min", axiom_sweep},
      {"leximax m=3 k=2: confirmed axiom failure", leximax_failure},
      {"Johnson paths valid for 1 <= j <= p <= 7 and every r", johnson_paths},
      {"alpha sums, range rank, kernel dimension and |B1|, |B2|", alpha_dimensions},
      {"kernel basis elements: witness, kernel membership, equal builtin scores", basis_elements},
      {"recovery round trip: builtins, m <= 5, k <= 3, B = 64, under 10 min", recovery_round_trip},
      {"majority m=3 k=1: Condorcet cycle and nonzero residual", majority_cycle},
      {"lambda vs 3*lambda+7: identical normalized tables and verdicts", affine_invariance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " -- " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
