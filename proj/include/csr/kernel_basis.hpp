#pragma once

#include <string>
#include <vector>

#include "csr/core.hpp"

namespace csr {

/// Situation P with a witness that it is (C1,C2)-symmetric: σ(P) = P and a
/// committee sequence F_1 = C1, F_2 = C2, ..., F_x = C1 with σ(F_i) = F_{i+1}.
struct SymmetricBasisElement {
  enum class Part { base, insert, distinctive };

  VotingSituation situation;
  Permutation sigma;
  std::vector<Committee> sequence;
  /// base: computed at k = 1; insert: B1 (extra member inserted at every
  /// rank); distinctive: B2 (built from restricted Johnson path edges).
  Part part = Part::base;
};

std::string to_string(SymmetricBasisElement::Part part);

struct KernelBasis {
  int m = 0;
  Committee c1;
  Committee c2;
  std::vector<SymmetricBasisElement> elements;
  std::size_t base_count = 0;
  std::size_t insert_count = 0;
  std::size_t distinctive_count = 0;
};

/// Checks σ(P) = P, F_1 = F_x = C1, F_2 = C2 and σ(F_i) = F_{i+1}. Kernel
/// membership is not part of this check.
bool verify_symmetric_situation(const SymmetricBasisElement& elem, const Committee& c1, const Committee& c2);

/// Basis of ker α_{C1,C2} made of (C1,C2)-symmetric situations, built by
/// induction on k: at k = 1 a basis is selected from swap pairs v + (c c')v,
/// 3-cycle orbits and orbits of other permutations sending c to c'; each step up inserts the new shared member at every
/// rank of the smaller basis and adds one element per edge of the
/// restricted Johnson paths. Every element's witness is verified and the
/// result's rank is certified; any mismatch throws std::logic_error.
/// Requires |C1 ∩ C2| = k-1 and C1 ≠ C2; throws ResourceError for m > max_m.
KernelBasis kernel_basis_symmetric(int m, const Committee& c1, const Committee& c2, int max_m = 6);

/// |B1| = p! - p·C(p-1, j-1) + p and |B2| = p·C(p-1, j-1)·(j-1)/j - (p-1).
long long expected_insert_count(int p, int j);
long long expected_distinctive_count(int p, int j);

}  // namespace csr
