// csr: command-line front end for committee scoring rules.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csr/axioms.hpp"
#include "csr/combinat.hpp"
#include "csr/decision.hpp"
#include "csr/errors.hpp"
#include "csr/kernel_basis.hpp"
#include "csr/linalg.hpp"
#include "csr/oracle.hpp"
#include "csr/profile_io.hpp"
#include "csr/recovery.hpp"
#include "csr/scoring.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInput = 3;
constexpr int kExitCap = 4;

const char* const kFormats = R"(Rules (--rule, --oracle):
  sntv | bloc | k-borda | cc | pav | pav:<t>   built-in committee scoring rules
  table:<path>                                 committee scoring table (below)
  decision:<path>                              decision scoring table (below)
  majority | leximax | trivial | first-voter | favor-first | threshold
                                               non-scoring comparators

Profile format:
  # comment
  m=4 k=2
  2: a > b > c > d
  -1/2: b > a > d > c
  The header gives the number of candidates and the committee size. Each
  vote line is "<multiplicity>: <ranking>" with a rational multiplicity and
  all m candidates separated by '>'. Names a, b, c... keep their alphabetical
  ids; other names are numbered by first appearance.
  Repeated rankings are summed.

Committee scoring table (lambda):
  4 2
  1,2	5
  1,3	4
  ...
  Header "<m> <k>" (or "m=<m> k=<k>"), then one row per position set:
  comma-separated ranks, a tab, a rational value. Every position set
  appears exactly once.

Decision scoring table (d):
  4 2 1
  1,2	1,3	1
  ...
  Header "<m> <k> <s>", then rows "<I1>\t<I2>\t<rational>" for pairs of
  position sets sharing s ranks. Storing I1 < I2 suffices; the reverse is
  the negation.

Committees are comma-separated candidate names ("a,c"); positions are
comma-separated ranks ("1,3").

Exit codes: compare 20/21/22 for C2 wins / tie / C1 wins; axioms 0 pass,
1 fail, 2 inconclusive; recover 1 when the data do not integrate or
verification finds a mismatch; 3 bad input; 4 size cap exceeded.)";

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw csr::DomainError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw csr::DomainError("cannot write " + path);
  out << text;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::optional<csr::CommitteeScoringFunction> scoring_rule(const std::string& rule_text, int m, int k,
                                                          std::optional<int> t) {
  if (starts_with(rule_text, "table:")) {
    auto lambda = csr::parse_scoring_table(read_file(rule_text.substr(6)), rule_text);
    if (lambda.m() != m || lambda.k() != k) {
      throw csr::DomainError("table " + rule_text + " is for m=" + std::to_string(lambda.m()) +
                             " k=" + std::to_string(lambda.k()));
    }
    return lambda;
  }
  if (starts_with(rule_text, "pav:")) {
    if (t) throw csr::DomainError("give the PAV depth either as pav:<t> or --t, not both");
    int depth = 0;
    try {
      std::size_t used = 0;
      depth = std::stoi(rule_text.substr(4), &used);
      if (used != rule_text.size() - 4) throw std::invalid_argument(rule_text);
    } catch (const std::exception&) {
      throw csr::DomainError("bad PAV depth in " + rule_text);
    }
    return csr::builtin("pav", m, k, depth);
  }
  for (const auto& name : csr::builtin_names()) {
    if (rule_text == name) return csr::builtin(name, m, k, t);
  }
  return std::nullopt;
}

csr::RuleOracle make_oracle(const std::string& rule_text, int m, int k, std::optional<int> t) {
  if (auto lambda = scoring_rule(rule_text, m, k, t)) return csr::scoring_oracle(*lambda);
  if (t) throw csr::DomainError("--t only applies to pav");
  if (starts_with(rule_text, "decision:")) {
    auto d = csr::parse_decision_table(read_file(rule_text.substr(9)), rule_text);
    if (d.m() != m || d.k() != k) throw csr::DomainError("decision table dimensions do not match");
    return csr::decision_oracle(d);
  }
  if (auto oracle = csr::named_oracle(rule_text, m, k)) return *oracle;
  throw csr::DomainError("unknown rule: " + rule_text);
}

csr::CommitteeScoringFunction require_scoring(const std::string& rule_text, int m, int k, std::optional<int> t) {
  auto lambda = scoring_rule(rule_text, m, k, t);
  if (!lambda) throw csr::DomainError(rule_text + " is not a committee scoring rule");
  return *lambda;
}

// m and k from a table rule when not given on the command line.
void infer_dimensions(const std::string& rule_text, std::optional<int>& m, std::optional<int>& k) {
  if (m && k) return;
  if (starts_with(rule_text, "table:")) {
    const auto lambda = csr::parse_scoring_table(read_file(rule_text.substr(6)), rule_text);
    if (!m) m = lambda.m();
    if (!k) k = lambda.k();
  } else if (starts_with(rule_text, "decision:")) {
    const auto d = csr::parse_decision_table(read_file(rule_text.substr(9)), rule_text);
    if (!m) m = d.m();
    if (!k) k = d.k();
  }
  if (!m || !k) throw csr::DomainError("--m and --k are required for rule " + rule_text);
}

json positions_json(const csr::CommitteePosition& pos) { return csr::format_positions(pos); }

json observation_json(const csr::Counterexample::Observation& o, int k, const csr::CandidateNames& names) {
  return {{"role", o.role},
          {"c1", csr::format_committee(o.c1, names)},
          {"c2", csr::format_committee(o.c2, names)},
          {"outcome", o.outcome},
          {"profile", csr::serialize_profile(o.situation, k, names)}};
}

json counterexample_json(const csr::Counterexample& cex, int m, int k, const csr::CandidateNames& names,
                         const std::string& confirmation) {
  json j;
  j["axiom"] = cex.axiom;
  j["c1"] = csr::format_committee(cex.c1, names);
  j["c2"] = csr::format_committee(cex.c2, names);
  j["explanation"] = cex.explanation;
  j["confirmed"] = confirmation.empty();
  if (!confirmation.empty()) j["confirmation_error"] = confirmation;
  j["observations"] = json::array();
  for (const auto& o : cex.observations) j["observations"].push_back(observation_json(o, k, names));
  if (!cex.profiles.empty()) {
    j["profiles"] = json::array();
    for (const auto& [profile, outcome] : cex.profiles) {
      json ballots = json::array();
      for (const auto& b : profile.ballots()) {
        ballots.push_back({{"voter", b.voter}, {"vote", csr::format_vote(b.vote, names)}});
      }
      j["profiles"].push_back({{"ballots", ballots}, {"outcome", outcome}});
    }
  }
  if (cex.sigma) {
    json images = json::array();
    for (int a = 1; a <= m; ++a) images.push_back(names[(*cex.sigma)(a)-1]);
    j["sigma"] = images;
  }
  if (cex.multiplier) j["multiplier"] = *cex.multiplier;
  if (cex.swapped) j["swapped"] = {names[cex.swapped->first - 1], names[cex.swapped->second - 1]};
  if (cex.edited_vote) j["edited_vote"] = csr::format_vote(*cex.edited_vote, names);
  return j;
}

json verification_json(const csr::VerificationStats& s, int k, const csr::CandidateNames& names) {
  json examples = json::array();
  for (const auto& e : s.examples) {
    examples.push_back({{"c1", csr::format_committee(e.c1, names)},
                        {"c2", csr::format_committee(e.c2, names)},
                        {"oracle", e.oracle_verdict},
                        {"recovered", e.recovered_verdict},
                        {"profile", csr::serialize_profile(e.situation, k, names)}});
  }
  return {{"situations", s.situations},
          {"comparisons", s.comparisons},
          {"mismatches", s.mismatches},
          {"examples", examples}};
}

json gauge_json(const std::optional<csr::Gauge>& g, const csr::CandidateNames& names) {
  if (!g) return nullptr;
  return {{"c1", csr::format_committee(g->c1, names)},
          {"c2", csr::format_committee(g->c2, names)},
          {"i1_star", positions_json(g->i1_star)},
          {"i2_star", positions_json(g->i2_star)},
          {"reoriented", g->reoriented}};
}

json delta_json(const csr::PositionPair& edge, const csr::DeltaValue& v) {
  json j = {{"i", positions_json(edge.first)}, {"j", positions_json(edge.second)}, {"exact", v.is_exact()}};
  if (v.exact) {
    j["value"] = v.exact->to_string();
  } else {
    j["lo"] = v.lo ? json(v.lo->to_string()) : json(nullptr);
    j["hi"] = v.hi ? json(v.hi->to_string()) : json(nullptr);
  }
  j["queries"] = v.queries;
  return j;
}

std::string verdict_text(int v) {
  if (v > 0) return "C1 ≻ C2";
  if (v < 0) return "C2 ≻ C1";
  return "C1 = C2";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Committee scoring rules: evaluation, axiom checks and recovery from comparisons", "csr"};
  app.footer(kFormats);
  app.require_subcommand(1);

  std::string rule;
  std::string profile_path;
  std::optional<int> t;
  std::optional<int> m_opt;
  std::optional<int> k_opt;
  std::string c1_text;
  std::string c2_text;
  std::optional<std::uint64_t> seed;

  auto* score = app.add_subcommand("score", "Committee scores under a scoring rule");
  score->add_option("--rule", rule, "Scoring rule")->required();
  score->add_option("--profile", profile_path, "Profile file ('-' for stdin)")->required();
  score->add_option("--committee", c1_text, "Only this committee");
  score->add_option("--t", t, "PAV approval depth");

  auto* rank = app.add_subcommand("rank", "Committees grouped by score, best first");
  rank->add_option("--rule", rule, "Scoring rule")->required();
  rank->add_option("--profile", profile_path, "Profile file ('-' for stdin)")->required();
  rank->add_option("--t", t, "PAV approval depth");

  auto* compare = app.add_subcommand("compare", "Compare two committees; exit 22/21/20 for C1 wins/tie/C2 wins");
  compare->add_option("--rule", rule, "Rule or comparator")->required();
  compare->add_option("--profile", profile_path, "Profile file ('-' for stdin)")->required();
  compare->add_option("--c1", c1_text, "First committee")->required();
  compare->add_option("--c2", c2_text, "Second committee")->required();
  compare->add_option("--t", t, "PAV approval depth");

  csr::AxiomConfig cfg;
  auto* axioms = app.add_subcommand("axioms", "Check the axioms on small instances; JSON report");
  axioms->add_option("--rule", rule, "Rule or comparator")->required();
  axioms->add_option("--m", m_opt, "Number of candidates");
  axioms->add_option("--k", k_opt, "Committee size");
  axioms->add_option("--t", t, "PAV approval depth");
  axioms->add_option("--seed", seed, "Seed for sampled checks")->required();
  axioms->add_option("--max-voters", cfg.max_voters, "Largest voter count")->capture_default_str();
  axioms->add_option("--pair-max-voters", cfg.pair_max_voters, "Voter cap per consistency half")
      ->capture_default_str();
  axioms->add_option("--exhaustive-limit", cfg.exhaustive_limit, "Enumerate spaces up to this size")
      ->capture_default_str();
  axioms->add_option("--samples", cfg.samples, "Samples for larger spaces")->capture_default_str();
  axioms->add_option("--n-max", cfg.n_max, "Continuity horizon")->capture_default_str();
  axioms->add_option("--ell-max", cfg.ell_max, "Largest multiplier")->capture_default_str();
  axioms->add_option("--max-calls", cfg.max_oracle_calls, "Oracle call budget per axiom")->capture_default_str();

  int j_val = 0, p_val = 0;
  std::optional<int> r_val;
  auto* johnson = app.add_subcommand("johnson", "Hamiltonian path of the Johnson graph, one position set per line");
  johnson->add_option("--j", j_val, "Subset size")->required();
  johnson->add_option("--p", p_val, "Ground set size")->required();
  johnson->add_option("--r", r_val, "Restrict to sets with an element below r");

  bool verify = false;
  int max_m = 6;
  auto* kernel = app.add_subcommand("kernel-basis", "Symmetric-situation basis of the position-difference kernel");
  kernel->add_option("--m", m_opt, "Number of candidates")->required();
  kernel->add_option("--k", k_opt, "Committee size")->required();
  kernel->add_option("--c1", c1_text, "First committee")->required();
  kernel->add_option("--c2", c2_text, "Second committee, sharing k-1 members")->required();
  kernel->add_flag("--verify", verify, "Also check kernel membership and equal scores under every built-in");
  kernel->add_option("--max-m", max_m, "Refuse larger m")->capture_default_str();

  long long bound = 64;
  std::string out_path;
  std::string report_path;
  std::uint64_t recover_seed = 0;
  int situations = 200;
  auto* recover = app.add_subcommand("recover", "Reconstruct a scoring table from comparisons");
  recover->add_option("--oracle", rule, "Rule or comparator to query")->required();
  recover->add_option("--m", m_opt, "Number of candidates");
  recover->add_option("--k", k_opt, "Committee size");
  recover->add_option("--t", t, "PAV approval depth");
  recover->add_option("--bound", bound, "Largest numerator and denominator tried")->capture_default_str();
  recover->add_option("--seed", recover_seed, "Seed for the verification sample")->capture_default_str();
  recover->add_option("--situations", situations, "Verification sample size")->capture_default_str();
  recover->add_option("--out", out_path, "Write the recovered table here");
  recover->add_option("--report", report_path, "Write the JSON report here instead of stdout");

  int k_prime = 0;
  auto* classify = app.add_subcommand("classify", "Search for a witness separating committees sharing k' members");
  classify->add_option("--rule", rule, "Scoring rule")->required();
  classify->add_option("--m", m_opt, "Number of candidates");
  classify->add_option("--k", k_opt, "Committee size");
  classify->add_option("--t", t, "PAV approval depth");
  classify->add_option("--kprime", k_prime, "Intersection size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (score->parsed() || rank->parsed() || compare->parsed()) {
      const auto parsed = csr::parse_profile(read_file(profile_path));
      const int m = parsed.m;
      const int k = parsed.k;
      if (compare->parsed()) {
        const auto oracle = make_oracle(rule, m, k, t);
        const auto c1 = csr::parse_committee(c1_text, parsed.names, k);
        const auto c2 = csr::parse_committee(c2_text, parsed.names, k);
        const int v = oracle(parsed.situation, c1, c2);
        std::cout << verdict_text(v) << "\n";
        return 21 + v;
      }
      const auto lambda = require_scoring(rule, m, k, t);
      if (score->parsed()) {
        if (!c1_text.empty()) {
          const auto c = csr::parse_committee(c1_text, parsed.names, k);
          std::cout << csr::committee_score(lambda, c, parsed.situation) << "\n";
          return 0;
        }
        for (const auto& c : csr::enumerate_positions(m, k)) {
          std::cout << csr::format_committee(c, parsed.names) << "\t"
                    << csr::committee_score(lambda, c, parsed.situation) << "\n";
        }
        return 0;
      }
      const auto order = csr::rank_committees(lambda, parsed.situation);
      for (std::size_t i = 0; i < order.classes.size(); ++i) {
        std::cout << order.scores[i] << "\t";
        for (std::size_t c = 0; c < order.classes[i].size(); ++c) {
          if (c) std::cout << " ";
          std::cout << csr::format_committee(order.classes[i][c], parsed.names);
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (axioms->parsed()) {
      infer_dimensions(rule, m_opt, k_opt);
      const int m = *m_opt;
      const int k = *k_opt;
      cfg.seed = *seed;
      const auto oracle = make_oracle(rule, m, k, t);
      const auto names = csr::default_names(m);
      const auto reports = csr::run_suite(oracle, cfg);
      const auto overall = csr::summarize(reports);
      json out;
      out["rule"] = oracle.label();
      out["m"] = m;
      out["k"] = k;
      out["seed"] = cfg.seed;
      out["verdict"] = csr::to_string(overall);
      out["axioms"] = json::array();
      for (const auto& r : reports) {
        json a;
        a["axiom"] = r.axiom;
        a["verdict"] = csr::to_string(r.verdict);
        a["stats"] = {{"instances", r.stats.instances},
                      {"skipped", r.stats.skipped},
                      {"oracle_calls", r.stats.oracle_calls},
                      {"space_size", r.stats.space_size},
                      {"exhaustive", r.stats.exhaustive}};
        a["notes"] = r.notes;
        a["counterexample"] = r.counterexample
                                  ? counterexample_json(*r.counterexample, m, k, names,
                                                        csr::confirm_counterexample(oracle, *r.counterexample))
                                  : json(nullptr);
        out["axioms"].push_back(a);
      }
      std::cout << out.dump(2) << "\n";
      if (overall == csr::Verdict::fail) return kExitFail;
      if (overall == csr::Verdict::inconclusive) return kExitInconclusive;
      return 0;
    }

    if (johnson->parsed()) {
      const auto path = r_val ? csr::johnson_path_restricted(j_val, p_val, *r_val) : csr::johnson_path(j_val, p_val);
      for (const auto& pos : path) std::cout << csr::format_positions(pos) << "\n";
      return 0;
    }

    if (kernel->parsed()) {
      const int m = *m_opt;
      const int k = *k_opt;
      const auto names = csr::default_names(m);
      const auto c1 = csr::parse_committee(c1_text, names, k);
      const auto c2 = csr::parse_committee(c2_text, names, k);
      const auto basis = csr::kernel_basis_symmetric(m, c1, c2, max_m);
      json out;
      out["m"] = m;
      out["k"] = k;
      out["c1"] = csr::format_committee(c1, names);
      out["c2"] = csr::format_committee(c2, names);
      out["counts"] = {{"total", basis.elements.size()},
                       {"base", basis.base_count},
                       {"insert", basis.insert_count},
                       {"distinctive", basis.distinctive_count}};
      out["expected_dimension"] = csr::factorial(m) - csr::binomial(m, k) + 1;
      std::size_t witness_ok = 0;
      std::size_t in_kernel = 0;
      std::size_t equal_scores = 0;
      std::vector<csr::CommitteeScoringFunction> lambdas;
      if (verify) {
        for (const auto& name : csr::builtin_names()) lambdas.push_back(csr::builtin(name, m, k));
      }
      out["elements"] = json::array();
      for (const auto& e : basis.elements) {
        json el;
        el["part"] = csr::to_string(e.part);
        json sigma = json::array();
        for (int a = 1; a <= m; ++a) sigma.push_back(names[e.sigma(a) - 1]);
        el["sigma"] = sigma;
        json seq = json::array();
        for (const auto& c : e.sequence) seq.push_back(csr::format_committee(c, names));
        el["sequence"] = seq;
        el["profile"] = csr::serialize_profile(e.situation, k, names);
        if (csr::verify_symmetric_situation(e, c1, c2)) ++witness_ok;
        if (verify) {
          const auto a = csr::alpha(c1, c2, e.situation);
          if (std::all_of(a.begin(), a.end(), [](const csr::Rational& q) { return q.is_zero(); })) ++in_kernel;
          bool equal = true;
          for (const auto& lambda : lambdas) {
            if (csr::committee_score(lambda, c1, e.situation) != csr::committee_score(lambda, c2, e.situation)) {
              equal = false;
            }
          }
          if (equal) ++equal_scores;
        }
        out["elements"].push_back(el);
      }
      json summary = {{"elements", basis.elements.size()}, {"witnesses_ok", witness_ok}};
      if (verify) {
        summary["in_kernel"] = in_kernel;
        summary["equal_scores_under_builtins"] = equal_scores;
      }
      const bool ok = witness_ok == basis.elements.size() &&
                      (!verify || (in_kernel == basis.elements.size() && equal_scores == basis.elements.size()));
      summary["ok"] = ok;
      out["verification"] = summary;
      std::cout << out.dump(2) << "\n";
      return ok ? 0 : kExitFail;
    }

    if (recover->parsed()) {
      infer_dimensions(rule, m_opt, k_opt);
      const int m = *m_opt;
      const int k = *k_opt;
      const auto oracle = make_oracle(rule, m, k, t);
      const auto names = csr::default_names(m);
      csr::RecoveryOptions options;
      options.seed = recover_seed;
      options.situations = situations;

      json out;
      out["oracle"] = oracle.label();
      out["m"] = m;
      out["k"] = k;
      out["bound"] = bound;
      out["seed"] = recover_seed;
      int code = 0;
      std::optional<csr::RecoveredScoring> scoring;
      csr::DeltaTable deltas = csr::estimate_delta_table(oracle, bound);
      std::optional<csr::VerificationReport> verification;
      try {
        scoring = csr::integrate_lambda(deltas, m, k);
        out["status"] = "ok";
      } catch (const csr::InconsistentOracleError& e) {
        scoring = e.partial();
        out["status"] = "inconsistent";
        out["error"] = e.what();
        code = kExitFail;
      } catch (const csr::DomainError& e) {
        out["status"] = "unresolved";
        out["error"] = e.what();
        code = kExitFail;
      }
      if (code == 0) {
        verification = csr::verify_recovered(oracle, scoring->lambda, options);
        if (!verification->passed()) {
          out["status"] = "mismatch";
          code = kExitFail;
        }
      }
      out["trivial"] = deltas.trivial();
      out["gauge"] = gauge_json(deltas.gauge, names);
      out["reference"] = positions_json(csr::enumerate_positions(m, k).back());
      out["deltas"] = json::array();
      for (const auto& [edge, v] : deltas.entries) out["deltas"].push_back(delta_json(edge, v));
      if (scoring) {
        json table = json::array();
        for (std::size_t i = 0; i < scoring->lambda.positions().size(); ++i) {
          table.push_back({{"position", positions_json(scoring->lambda.positions()[i])},
                           {"value", scoring->lambda.at_index(i).to_string()}});
        }
        out["lambda"] = table;
        json residuals = json::array();
        for (const auto& r : scoring->residuals) {
          residuals.push_back({{"i", positions_json(r.i)}, {"j", positions_json(r.j)}, {"value", r.value.to_string()}});
        }
        out["residuals"] = residuals;
        out["consistent"] = scoring->consistent();
        if (!out_path.empty() && code == 0) write_file(out_path, csr::serialize_scoring_table(scoring->lambda));
      } else {
        out["lambda"] = nullptr;
        out["residuals"] = json::array();
        out["consistent"] = false;
      }
      if (verification) {
        out["verification"] = {{"adjacent", verification_json(verification->adjacent, k, names)},
                               {"all_pairs", verification_json(verification->all_pairs, k, names)}};
      } else {
        out["verification"] = nullptr;
      }
      if (report_path.empty()) {
        std::cout << out.dump(2) << "\n";
      } else {
        write_file(report_path, out.dump(2) + "\n");
      }
      return code;
    }

    if (classify->parsed()) {
      infer_dimensions(rule, m_opt, k_opt);
      const auto lambda = require_scoring(rule, *m_opt, *k_opt, t);
      const auto report = csr::classify_case(lambda, k_prime);
      std::cout << report.label() << "\n";
      if (!report.witness.empty()) {
        std::cout << "witness\t";
        for (std::size_t i = 0; i < report.witness.size(); ++i) std::cout << (i ? "," : "") << report.witness[i];
        if (report.x) std::cout << "\tx=" << *report.x;
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const csr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const csr::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const csr::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  }
  return 0;
}
