#include "csr/scoring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "csr/combinat.hpp"
#include "csr/errors.hpp"
#include "csr/profile_io.hpp"
#include "text_util.hpp"

namespace csr {

CommitteeScoringFunction::CommitteeScoringFunction(int m, int k, std::vector<Rational> table, std::string label)
    : m_(m), k_(k), label_(std::move(label)), positions_(enumerate_positions(m, k)), table_(std::move(table)) {
  if (table_.size() != positions_.size()) {
    throw DomainError("scoring table needs " + std::to_string(positions_.size()) + " entries, got " +
                      std::to_string(table_.size()));
  }
  canonical_ = check_dominance_monotone(*this).ok;
}

const Rational& CommitteeScoringFunction::operator()(const CommitteePosition& pos) const {
  if (static_cast<int>(pos.size()) != k_) throw DomainError("position set has wrong size");
  return table_[position_index(pos, m_)];
}

bool CommitteeScoringFunction::is_constant() const {
  return std::all_of(table_.begin(), table_.end(), [&](const Rational& q) { return q == table_.front(); });
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"sntv", "bloc", "k-borda", "cc", "pav"};
  return names;
}

CommitteeScoringFunction builtin(std::string_view name, int m, int k, std::optional<int> t) {
  if (k < 1 || k > m) throw DomainError("builtin rules require 1 <= k <= m");
  const int depth = t.value_or(k);
  if (name == "pav" && (depth < 1 || depth > m)) throw DomainError("pav requires 1 <= t <= m");
  if (name != "pav" && t) throw DomainError("parameter t only applies to pav");

  std::vector<Rational> table;
  std::string label(name);
  for (const auto& pos : enumerate_positions(m, k)) {
    Rational v;
    if (name == "sntv") {
      v = pos.front() == 1 ? 1 : 0;
    } else if (name == "bloc") {
      for (int i : pos) v += i <= k ? 1 : 0;
    } else if (name == "k-borda") {
      for (int i : pos) v += m - i;
    } else if (name == "cc") {
      v = m - pos.front();
    } else if (name == "pav") {
      for (int j = 1; j <= k; ++j) {
        if (pos[j - 1] <= depth) v += Rational(1, j);
      }
    } else {
      throw DomainError("unknown rule '" + std::string(name) + "'");
    }
    table.push_back(v);
  }
  if (name == "pav") label += ":" + std::to_string(depth);
  return CommitteeScoringFunction(m, k, std::move(table), label);
}

CommitteeScoringFunction affine_transform(const CommitteeScoringFunction& lambda, const Rational& q,
                                          const Rational& c) {
  std::vector<Rational> table;
  table.reserve(lambda.table().size());
  for (const auto& v : lambda.table()) table.push_back(q * v + c);
  return CommitteeScoringFunction(lambda.m(), lambda.k(), std::move(table), lambda.label() + "(affine)");
}

Rational committee_score(const CommitteeScoringFunction& lambda, const Committee& c, const VotingSituation& p) {
  if (lambda.m() != p.m()) throw DomainError("committee_score: m mismatch");
  if (static_cast<int>(c.size()) != lambda.k()) throw DomainError("committee_score: committee size differs from k");
  Rational total;
  for (const auto& [v, q] : p) total += q * lambda.at_index(position_index(position_of_committee(v, c), p.m()));
  return total;
}

int compare(const CommitteeScoringFunction& lambda, const Committee& c1, const Committee& c2,
            const VotingSituation& p) {
  return (committee_score(lambda, c1, p) - committee_score(lambda, c2, p)).sign();
}

WeakOrder rank_committees(const CommitteeScoringFunction& lambda, const VotingSituation& p, long long max_committees) {
  const auto committees = enumerate_positions(lambda.m(), lambda.k(), max_committees);
  std::vector<std::pair<Rational, std::size_t>> scored;
  scored.reserve(committees.size());
  for (std::size_t i = 0; i < committees.size(); ++i) scored.emplace_back(committee_score(lambda, committees[i], p), i);
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  WeakOrder out;
  for (const auto& [score, idx] : scored) {
    if (out.scores.empty() || out.scores.back() != score) {
      out.scores.push_back(score);
      out.classes.emplace_back();
    }
    out.classes.back().push_back(committees[idx]);
  }
  return out;
}

DominanceCheck check_dominance_monotone(const CommitteeScoringFunction& lambda) {
  DominanceCheck res;
  const auto& pos = lambda.positions();
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if (a != b && dominates(pos[a], pos[b]) && lambda.at_index(a) < lambda.at_index(b)) {
        res.ok = false;
        res.violation = std::make_pair(pos[a], pos[b]);
        return res;
      }
    }
  }
  return res;
}

std::string serialize_scoring_table(const CommitteeScoringFunction& lambda) {
  std::string out = std::to_string(lambda.m()) + " " + std::to_string(lambda.k()) + "\n";
  for (std::size_t i = 0; i < lambda.positions().size(); ++i) {
    out += format_positions(lambda.positions()[i]) + "\t" + lambda.at_index(i).to_string() + "\n";
  }
  return out;
}

CommitteeScoringFunction parse_scoring_table(std::string_view input, std::string label) {
  std::vector<int> header;
  int m = 0;
  int k = 0;
  std::map<CommitteePosition, Rational> rows;
  int line_no = 0;
  bool have_header = false;
  for (std::string_view raw : text::split(input, '\n')) {
    ++line_no;
    const auto line = text::content(raw);
    if (line.empty()) continue;
    if (!have_header) {
      if (!text::parse_int_header(line, {"m", "k"}, header)) throw ParseError("expected header '<m> <k>'", line_no);
      m = header[0];
      k = header[1];
      if (m < 1 || k < 1 || k > m) throw ParseError("header requires 1 <= k <= m", line_no);
      have_header = true;
      continue;
    }
    const auto fields = text::split_ws(line);
    if (fields.size() != 2) throw ParseError("expected '<positions>\\t<rational>'", line_no);
    try {
      auto pos = parse_positions(fields[0], m, k);
      if (!rows.emplace(std::move(pos), Rational::parse(fields[1])).second) {
        throw ParseError("duplicate position set", line_no);
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line_no);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_header) throw ParseError("missing header '<m> <k>'");
  if (static_cast<long long>(rows.size()) != binomial(m, k)) {
    throw ParseError("table must list all " + std::to_string(binomial(m, k)) + " position sets");
  }
  std::vector<Rational> table;
  for (auto& [pos, v] : rows) table.push_back(std::move(v));  // std::map order is lexicographic
  return CommitteeScoringFunction(m, k, std::move(table), std::move(label));
}

}  // namespace csr
