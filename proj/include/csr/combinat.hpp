#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csr/core.hpp"

namespace csr {

/// Sequence of j-subsets, consecutive ones differing in one element.
using PositionPath = std::vector<CommitteePosition>;

/// Default cap on C(m,k) for enumerations.
inline constexpr long long kDefaultMaxPositions = 1'000'000;

/// All k-subsets of 1..m in lexicographic order.
std::vector<CommitteePosition> enumerate_positions(int m, int k, long long max_count = kDefaultMaxPositions);

/// Index of `pos` in enumerate_positions(m, k).
std::size_t position_index(const CommitteePosition& pos, int m);

/// Componentwise i_t <= j_t. Throws DomainError on size mismatch.
bool dominates(const CommitteePosition& i, const CommitteePosition& j);

/// Hamiltonian path of the Johnson graph G(j,p) from {1..j} to {p-j+1..p}.
PositionPath johnson_path(int j, int p);

/// Hamiltonian path of the subgraph induced by the j-subsets of 1..p that
/// contain an element < r, starting at {1..j}. Throws DomainError for
/// r = 1 (empty graph) or parameters out of range.
PositionPath johnson_path_restricted(int j, int p, int r);

struct PathCheck {
  bool ok = true;
  std::string message;
  /// Index into the path of the first offending element, if any.
  std::optional<std::size_t> index;
};

/// Independent validator: every j-subset of 1..p satisfying `in_graph`
/// appears exactly once, nothing else appears, consecutive elements have a
/// symmetric difference of size 2, and the endpoints match when given.
PathCheck verify_hamiltonian(const PositionPath& path, int j, int p,
                             const std::function<bool(const CommitteePosition&)>& in_graph,
                             const std::optional<CommitteePosition>& first = std::nullopt,
                             const std::optional<CommitteePosition>& last = std::nullopt);

}  // namespace csr
