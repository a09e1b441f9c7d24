#include "csr/decision.hpp"

#include "csr/combinat.hpp"
#include "csr/errors.hpp"
#include "csr/profile_io.hpp"
#include "text_util.hpp"

namespace csr {

DecisionScoringFunction::DecisionScoringFunction(
    int m, int k, int s, const std::function<Rational(const CommitteePosition&, const CommitteePosition&)>& fn,
    std::string label)
    : m_(m), k_(k), s_(s), label_(std::move(label)) {
  if (k < 1 || k > m || s < 0 || s > k - 1 || 2 * k - s > m) {
    throw DomainError("decision table requires 1 <= k <= m, 0 <= s <= k-1 and 2k - s <= m");
  }
  const auto positions = enumerate_positions(m, k);
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = a + 1; b < positions.size(); ++b) {
      if (static_cast<int>(set_intersection(positions[a], positions[b]).size()) != s) continue;
      const Rational v = fn(positions[a], positions[b]);
      table_.emplace(Key{positions[a], positions[b]}, v);
      table_.emplace(Key{positions[b], positions[a]}, -v);
    }
  }
}

bool DecisionScoringFunction::in_domain(const CommitteePosition& i1, const CommitteePosition& i2) const {
  return table_.count(Key{i1, i2}) > 0;
}

const Rational& DecisionScoringFunction::operator()(const CommitteePosition& i1, const CommitteePosition& i2) const {
  const auto it = table_.find(Key{i1, i2});
  if (it == table_.end()) {
    throw DomainError("pair (" + format_positions(i1) + "),(" + format_positions(i2) +
                      ") is outside the decision table domain (intersection size " + std::to_string(s_) + ")");
  }
  return it->second;
}

std::vector<std::pair<DecisionScoringFunction::Key, Rational>> DecisionScoringFunction::upper_entries() const {
  std::vector<std::pair<Key, Rational>> out;
  for (const auto& [key, v] : table_) {
    if (key.first < key.second) out.emplace_back(key, v);
  }
  return out;
}

DecisionScoringFunction majority(int m, int k) {
  if (k != 1) throw DomainError("the majority decision function is defined for k = 1 only");
  return DecisionScoringFunction(
      m, 1, 0, [](const CommitteePosition& a, const CommitteePosition& b) { return Rational(a[0] < b[0] ? 1 : -1); },
      "majority");
}

DecisionScoringFunction from_scoring(const CommitteeScoringFunction& lambda, int s) {
  if (s < 0 || s > lambda.k() - 1) throw DomainError("from_scoring requires 0 <= s <= k-1");
  return DecisionScoringFunction(
      lambda.m(), lambda.k(), s,
      [&lambda](const CommitteePosition& a, const CommitteePosition& b) { return lambda(a) - lambda(b); },
      lambda.label() + "/s=" + std::to_string(s));
}

Rational pair_score(const DecisionScoringFunction& d, const Committee& c1, const Committee& c2,
                    const VotingSituation& p) {
  if (d.m() != p.m()) throw DomainError("pair_score: m mismatch");
  if (static_cast<int>(c1.size()) != d.k() || static_cast<int>(c2.size()) != d.k()) {
    throw DomainError("pair_score: committee size differs from k");
  }
  if (c1 == c2) return 0;
  if (static_cast<int>(set_intersection(c1, c2).size()) != d.s()) {
    throw DomainError("pair_score: committees share " + std::to_string(set_intersection(c1, c2).size()) +
                      " members, table expects " + std::to_string(d.s()));
  }
  Rational total;
  for (const auto& [v, q] : p) total += q * d(position_of_committee(v, c1), position_of_committee(v, c2));
  return total;
}

int decide(const DecisionScoringFunction& d, const Committee& c1, const Committee& c2, const VotingSituation& p) {
  return pair_score(d, c1, c2, p).sign();
}

std::optional<std::array<Committee, 3>> find_intransitivity(const DecisionScoringFunction& d, const VotingSituation& p,
                                                            const std::vector<Committee>& committees) {
  const std::size_t n = committees.size();
  auto eligible = [&](std::size_t a, std::size_t b) {
    return a != b && static_cast<int>(set_intersection(committees[a], committees[b]).size()) == d.s();
  };
  std::vector<std::vector<int>> beats(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!eligible(a, b)) continue;
      const int r = decide(d, committees[a], committees[b], p);
      beats[a][b] = r > 0;
      beats[b][a] = r < 0;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!beats[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (beats[b][c] && beats[c][a]) return std::array<Committee, 3>{committees[a], committees[b], committees[c]};
      }
    }
  }
  return std::nullopt;
}

std::string serialize_decision_table(const DecisionScoringFunction& d) {
  std::string out = std::to_string(d.m()) + " " + std::to_string(d.k()) + " " + std::to_string(d.s()) + "\n";
  for (const auto& [key, v] : d.upper_entries()) {
    out += format_positions(key.first) + "\t" + format_positions(key.second) + "\t" + v.to_string() + "\n";
  }
  return out;
}

DecisionScoringFunction parse_decision_table(std::string_view input, std::string label) {
  std::vector<int> header;
  std::map<DecisionScoringFunction::Key, Rational> rows;
  bool have_header = false;
  int line_no = 0;
  for (std::string_view raw : text::split(input, '\n')) {
    ++line_no;
    const auto line = text::content(raw);
    if (line.empty()) continue;
    if (!have_header) {
      if (!text::parse_int_header(line, {"m", "k", "s"}, header)) {
        throw ParseError("expected header '<m> <k> <s>'", line_no);
      }
      have_header = true;
      continue;
    }
    const auto fields = text::split_ws(line);
    if (fields.size() != 3) throw ParseError("expected '<I1>\\t<I2>\\t<rational>'", line_no);
    try {
      auto i1 = parse_positions(fields[0], header[0], header[1]);
      auto i2 = parse_positions(fields[1], header[0], header[1]);
      Rational v = Rational::parse(fields[2]);
      if (i2 < i1) {
        std::swap(i1, i2);
        v = -v;
      }
      if (static_cast<int>(set_intersection(i1, i2).size()) != header[2] || i1 == i2) {
        throw ParseError("pair does not have intersection size " + std::to_string(header[2]), line_no);
      }
      if (!rows.emplace(DecisionScoringFunction::Key{i1, i2}, v).second) throw ParseError("duplicate pair", line_no);
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line_no);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_header) throw ParseError("missing header '<m> <k> <s>'");
  std::size_t used = 0;
  DecisionScoringFunction d(
      header[0], header[1], header[2],
      [&](const CommitteePosition& a, const CommitteePosition& b) {
        const auto it = rows.find({a, b});
        if (it == rows.end()) throw ParseError("missing row for pair " + format_positions(a) + " / " + format_positions(b));
        ++used;
        return it->second;
      },
      std::move(label));
  if (used != rows.size()) throw ParseError("table has rows outside the domain");
  return d;
}

}  // namespace csr
