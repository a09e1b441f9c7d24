#include "csr/random.hpp"

#include <numeric>
#include <utility>

namespace csr {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

Permutation Rng::permutation(int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  for (int i = m - 1; i > 0; --i) std::swap(images[i], images[below(i + 1)]);
  return Permutation(std::move(images));
}

Vote Rng::vote(int m) { return Vote(permutation(m).images()); }

VotingSituation Rng::situation(int m, int voters) {
  VotingSituation p(m);
  for (int i = 0; i < voters; ++i) p.add(vote(m), 1);
  return p;
}

}  // namespace csr
