#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "csr/core.hpp"

namespace csr {

/// Seeded generator with platform-independent output. std::mt19937_64 is
/// fully specified by the standard; the distributions are not, so the
/// reductions to a range are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi].
  long long between(long long lo, long long hi) { return lo + static_cast<long long>(below(hi - lo + 1)); }

  Vote vote(int m);
  Permutation permutation(int m);
  /// Situation with `voters` votes drawn independently and uniformly.
  VotingSituation situation(int m, int voters);

 private:
  std::mt19937_64 engine_;
};

}  // namespace csr
