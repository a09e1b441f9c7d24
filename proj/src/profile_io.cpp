#include "csr/profile_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "csr/errors.hpp"
#include "text_util.hpp"

namespace csr {

namespace {

using text::parse_int;
using text::split;
using text::trim;

// Parses "m=<int> k=<int>"; returns false if the line is not a header.
bool parse_header(std::string_view line, int& m, int& k) {
  std::istringstream in{std::string(line)};
  std::string a;
  std::string b;
  std::string extra;
  if (!(in >> a >> b) || (in >> extra)) return false;
  if (a.rfind("m=", 0) != 0 || b.rfind("k=", 0) != 0) return false;
  return parse_int(std::string_view(a).substr(2), m) && parse_int(std::string_view(b).substr(2), k);
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '>' || c == ':' || c == '#' || c == ',';
  });
}

}  // namespace

CandidateNames default_names(int m) {
  CandidateNames names;
  for (int i = 0; i < m; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "c" + std::to_string(i + 1));
  }
  return names;
}

ParsedProfile parse_profile(std::string_view text) {
  ParsedProfile out;
  bool have_header = false;
  std::map<std::string, int, std::less<>> ids;
  struct Line {
    int line_no;
    Rational count;
    std::vector<std::string_view> names;
  };
  std::vector<Line> lines;

  int line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string_view line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    if (!have_header) {
      if (!parse_header(line, out.m, out.k)) throw ParseError("expected header 'm=<int> k=<int>'", line_no);
      if (out.m < 1 || out.k < 1 || out.k > out.m) {
        throw ParseError("header requires 1 <= k <= m", line_no);
      }
      have_header = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<count>: <ranking>'", line_no);
    Rational count;
    try {
      count = Rational::parse(trim(line.substr(0, colon)));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    Line entry{line_no, count, {}};
    for (std::string_view tok : split(line.substr(colon + 1), '>')) {
      tok = trim(tok);
      if (!valid_name(tok)) throw ParseError("malformed candidate name '" + std::string(tok) + "'", line_no);
      if (std::find(entry.names.begin(), entry.names.end(), tok) != entry.names.end()) {
        throw ParseError("duplicate candidate '" + std::string(tok) + "' in ranking", line_no);
      }
      entry.names.push_back(tok);
      if (ids.find(tok) == ids.end()) {
        const int id = static_cast<int>(ids.size()) + 1;
        ids.emplace(std::string(tok), id);
        out.names.emplace_back(tok);
      }
    }
    lines.push_back(std::move(entry));
  }
  if (!have_header) throw ParseError("missing header 'm=<int> k=<int>'");

  if (lines.empty()) {
    out.names = default_names(out.m);
  } else if (static_cast<int>(out.names.size()) != out.m) {
    throw ParseError("profile names " + std::to_string(out.names.size()) + " candidates but m=" +
                     std::to_string(out.m));
  } else {
    // The default names keep their default ids, so serialized situations
    // round-trip exactly.
    auto defaults = default_names(out.m);
    auto sorted = out.names;
    std::sort(sorted.begin(), sorted.end());
    auto sorted_defaults = defaults;
    std::sort(sorted_defaults.begin(), sorted_defaults.end());
    if (sorted == sorted_defaults) {
      out.names = defaults;
      ids.clear();
      for (int i = 0; i < out.m; ++i) ids.emplace(defaults[i], i + 1);
    }
  }
  out.situation = VotingSituation(out.m);
  for (const auto& entry : lines) {
    if (static_cast<int>(entry.names.size()) != out.m) {
      throw ParseError("ranking must list all " + std::to_string(out.m) + " candidates", entry.line_no);
    }
    std::vector<int> order;
    for (auto name : entry.names) order.push_back(ids.find(name)->second);
    out.situation.add(Vote(std::move(order)), entry.count);
  }
  return out;
}

std::string format_vote(const Vote& v, const CandidateNames& names) {
  std::string out;
  for (int r = 1; r <= v.m(); ++r) {
    if (r > 1) out += " > ";
    out += names.at(v.at(r) - 1);
  }
  return out;
}

std::string serialize_profile(const VotingSituation& p, int k, const CandidateNames& names) {
  if (static_cast<int>(names.size()) != p.m()) throw DomainError("serialize_profile: name count differs from m");
  std::string out = "m=" + std::to_string(p.m()) + " k=" + std::to_string(k) + "\n";
  for (const auto& [v, q] : p) out += q.to_string() + ": " + format_vote(v, names) + "\n";
  return out;
}

std::string serialize_profile(const VotingSituation& p, int k) {
  return serialize_profile(p, k, default_names(p.m()));
}

Committee parse_committee(std::string_view text, const CandidateNames& names, int k) {
  std::vector<int> members;
  for (std::string_view tok : split(text, ',')) {
    tok = trim(tok);
    const auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw DomainError("unknown candidate '" + std::string(tok) + "'");
    members.push_back(static_cast<int>(it - names.begin()) + 1);
  }
  return make_committee(static_cast<int>(names.size()), k, std::move(members));
}

std::string format_committee(const Committee& c, const CandidateNames& names) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ",";
    out += names.at(c[i] - 1);
  }
  return out;
}

CommitteePosition parse_positions(std::string_view text, int m, int k) {
  std::vector<int> pos;
  for (std::string_view tok : split(text, ',')) {
    int value = 0;
    if (!parse_int(trim(tok), value)) throw ParseError("malformed position '" + std::string(tok) + "'");
    pos.push_back(value);
  }
  std::sort(pos.begin(), pos.end());
  if (static_cast<int>(pos.size()) != k) throw DomainError("position set must have " + std::to_string(k) + " entries");
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] < 1 || pos[i] > m) throw DomainError("position out of range 1.." + std::to_string(m));
    if (i > 0 && pos[i] == pos[i - 1]) throw DomainError("repeated position");
  }
  return pos;
}

std::string format_positions(const CommitteePosition& pos) {
  std::string out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(pos[i]);
  }
  return out;
}

}  // namespace csr
