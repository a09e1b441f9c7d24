#include "csr/combinat.hpp"

#include <algorithm>
#include <set>

#include "csr/errors.hpp"

namespace csr {

namespace {

// Groups x = 1..groups of the minimum-element partition. Group x holds the
// sets {x} ∪ S with S a (j-1)-subset of {x+1..p}; odd groups are walked
// along the sub-path, even groups against it, so that consecutive groups
// meet over a single edge.
PositionPath build_path(int j, int p, int groups) {
  if (j == 0) return {CommitteePosition{}};
  PositionPath out;
  for (int x = 1; x <= groups; ++x) {
    PositionPath sub = build_path(j - 1, p - x, p - x - (j - 1) + 1);
    if (x % 2 == 0) std::reverse(sub.begin(), sub.end());
    for (const auto& s : sub) {
      CommitteePosition v;
      v.reserve(j);
      v.push_back(x);
      for (int e : s) v.push_back(e + x);
      out.push_back(std::move(v));
    }
  }
  return out;
}

bool adjacent(const CommitteePosition& a, const CommitteePosition& b) {
  if (a.size() != b.size()) return false;
  return set_intersection(a, b).size() + 1 == a.size();
}

}  // namespace

std::vector<CommitteePosition> enumerate_positions(int m, int k, long long max_count) {
  if (k < 1 || k > m) throw DomainError("enumerate_positions requires 1 <= k <= m");
  if (binomial(m, k) > max_count) {
    throw ResourceError("C(" + std::to_string(m) + "," + std::to_string(k) + ") exceeds enumeration cap");
  }
  std::vector<CommitteePosition> out;
  CommitteePosition cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == m - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int t = i + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

std::size_t position_index(const CommitteePosition& pos, int m) {
  const int k = static_cast<int>(pos.size());
  long long idx = 0;
  int prev = 0;
  for (int t = 0; t < k; ++t) {
    for (int v = prev + 1; v < pos[t]; ++v) idx += binomial(m - v, k - t - 1);
    prev = pos[t];
  }
  return static_cast<std::size_t>(idx);
}

bool dominates(const CommitteePosition& i, const CommitteePosition& j) {
  if (i.size() != j.size()) throw DomainError("dominates: size mismatch");
  for (std::size_t t = 0; t < i.size(); ++t) {
    if (i[t] > j[t]) return false;
  }
  return true;
}

PositionPath johnson_path(int j, int p) {
  if (j < 1 || j > p) throw DomainError("johnson_path requires 1 <= j <= p");
  PositionPath path = build_path(j, p, p - j + 1);
  CommitteePosition first(j);
  CommitteePosition last(j);
  for (int t = 0; t < j; ++t) {
    first[t] = t + 1;
    last[t] = p - j + 1 + t;
  }
  const auto check = verify_hamiltonian(path, j, p, [](const CommitteePosition&) { return true; }, first, last);
  if (!check.ok) throw std::logic_error("johnson_path construction failed: " + check.message);
  return path;
}

PositionPath johnson_path_restricted(int j, int p, int r) {
  if (j < 1 || j > p - 1 || r > p) throw DomainError("johnson_path_restricted requires 1 <= j <= p-1 and r <= p");
  if (r < 2) throw DomainError("restricted Johnson graph is empty for r = 1");
  PositionPath path = build_path(j, p, std::min(r - 1, p - j + 1));
  CommitteePosition first(j);
  for (int t = 0; t < j; ++t) first[t] = t + 1;
  const auto check = verify_hamiltonian(
      path, j, p, [r](const CommitteePosition& s) { return s.front() < r; }, first, std::nullopt);
  if (!check.ok) throw std::logic_error("restricted johnson_path construction failed: " + check.message);
  return path;
}

PathCheck verify_hamiltonian(const PositionPath& path, int j, int p,
                             const std::function<bool(const CommitteePosition&)>& in_graph,
                             const std::optional<CommitteePosition>& first,
                             const std::optional<CommitteePosition>& last) {
  PathCheck res;
  auto fail = [&res](std::string msg, std::optional<std::size_t> idx) {
    res.ok = false;
    res.message = std::move(msg);
    res.index = idx;
    return res;
  };
  // Vertex set by bitmask enumeration, independent of enumerate_positions.
  std::set<CommitteePosition> expected;
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    if (__builtin_popcount(mask) != j) continue;
    CommitteePosition s;
    for (int e = 1; e <= p; ++e) {
      if (mask & (1u << (e - 1))) s.push_back(e);
    }
    if (in_graph(s)) expected.insert(std::move(s));
  }
  std::set<CommitteePosition> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& v = path[i];
    if (!std::is_sorted(v.begin(), v.end()) || expected.count(v) == 0) {
      return fail("element is not a vertex of the graph", i);
    }
    if (!seen.insert(v).second) return fail("vertex repeated", i);
    if (i > 0 && !adjacent(path[i - 1], v)) return fail("consecutive vertices are not adjacent", i);
  }
  if (seen.size() != expected.size()) {
    return fail("path covers " + std::to_string(seen.size()) + " of " + std::to_string(expected.size()) +
                    " vertices",
                std::nullopt);
  }
  if (first && (path.empty() || path.front() != *first)) return fail("wrong first vertex", 0);
  if (last && (path.empty() || path.back() != *last)) {
    return fail("wrong last vertex", path.empty() ? 0 : path.size() - 1);
  }
  return res;
}

}  // namespace csr
