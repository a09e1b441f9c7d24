#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace csr::text {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Strips a '#' comment and surrounding whitespace.
inline std::string_view content(std::string_view line) { return trim(line.substr(0, line.find('#'))); }

// Parses integer header fields given either bare ("4 2") or labelled
// ("m=4 k=2"). Returns false on any mismatch.
inline bool parse_int_header(std::string_view line, const std::vector<std::string>& labels,
                             std::vector<int>& values) {
  const auto fields = split_ws(line);
  if (fields.size() != labels.size()) return false;
  values.assign(labels.size(), 0);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::string_view f = fields[i];
    const std::string prefix = labels[i] + "=";
    if (f.substr(0, prefix.size()) == prefix) f.remove_prefix(prefix.size());
    if (!parse_int(f, values[i])) return false;
  }
  return true;
}

}  // namespace csr::text
