#include "csr/kernel_basis.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "csr/combinat.hpp"
#include "csr/errors.hpp"
#include "csr/linalg.hpp"

namespace csr {

namespace {

using Part = SymmetricBasisElement::Part;

Committee range_set(int lo, int hi) {
  Committee c;
  for (int x = lo; x <= hi; ++x) c.push_back(x);
  return c;
}

constexpr unsigned long long kPrime = (1ULL << 61) - 1;

unsigned long long mod_reduce(long long x) {
  const long long r = x % static_cast<long long>(kPrime);
  return static_cast<unsigned long long>(r < 0 ? r + static_cast<long long>(kPrime) : r);
}

unsigned long long mod_mul(unsigned long long a, unsigned long long b) {
  return static_cast<unsigned long long>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

unsigned long long mod_inverse(unsigned long long b) {
  unsigned long long r = 1;
  unsigned long long e = kPrime - 2;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, b);
    b = mod_mul(b, b);
    e >>= 1;
  }
  return r;
}

// Echelon basis over GF(2^61 - 1) for integer vectors. Independence modulo
// the prime implies independence over Q, so accepted vectors are always
// independent over Q.
class ModBasis {
 public:
  explicit ModBasis(std::size_t dim) : dim_(dim) {}

  bool add(const std::vector<long long>& v) {
    std::vector<unsigned long long> x(dim_);
    for (std::size_t j = 0; j < dim_; ++j) x[j] = mod_reduce(v[j]);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto f = x[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (rows_[i][j] != 0) x[j] = (x[j] + kPrime - mod_mul(f, rows_[i][j])) % kPrime;
      }
    }
    std::size_t p = 0;
    while (p < dim_ && x[p] == 0) ++p;
    if (p == dim_) return false;
    const auto inv = mod_inverse(x[p]);
    for (auto& e : x) e = mod_mul(e, inv);
    for (auto& row : rows_) {
      const auto f = row[p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (x[j] != 0) row[j] = (row[j] + kPrime - mod_mul(f, x[j])) % kPrime;
      }
    }
    rows_.push_back(std::move(x));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<unsigned long long>> rows_;
  std::vector<std::size_t> pivots_;
};

// Integer coordinates of a situation, or nullopt if some count is not a
// machine integer.
std::optional<std::vector<long long>> integer_vector(const VotingSituation& s, const VoteIndex& index) {
  std::vector<long long> row(index.size(), 0);
  for (const auto& [v, q] : s) {
    if (!q.is_integer() || !q.raw().get_num().fits_slong_p()) return std::nullopt;
    row[index.index(v)] = q.raw().get_num().get_si();
  }
  return row;
}

std::size_t certified_rank(const std::vector<VotingSituation>& situations, const VoteIndex& index) {
  ModBasis fast(index.size());
  bool integral = true;
  for (const auto& s : situations) {
    const auto row = integer_vector(s, index);
    if (!row) {
      integral = false;
      break;
    }
    fast.add(*row);
  }
  if (integral && fast.size() == situations.size()) return fast.size();
  std::vector<RationalVector> vecs;
  for (const auto& s : situations) vecs.push_back(index.to_vector(s));
  return rank_of_vectors(vecs, index.size());
}

VotingSituation orbit_sum(const Vote& v, const Permutation& sigma) {
  VotingSituation s(v.m());
  Vote cur = v;
  do {
    s.add(cur, 1);
    cur = apply_permutation(sigma, cur);
  } while (cur != v);
  return s;
}

// Base case k = 1, C1 = {1}, C2 = {2}: greedy rank selection from the swap
// pairs v + (1 2)v, then the orbits of the 3-cycles (1 2 c), then orbits of
// any other permutation sending 1 to 2.
std::vector<SymmetricBasisElement> base_basis(int p) {
  const long long target = factorial(p) - p + 1;
  const VoteIndex index(p);
  ModBasis span(index.size());
  std::vector<SymmetricBasisElement> out;
  auto offer = [&](const Vote& v, const Permutation& sigma, std::vector<Committee> seq) {
    // Take each orbit once, from its lexicographically smallest vote.
    for (Vote cur = apply_permutation(sigma, v); cur != v; cur = apply_permutation(sigma, cur)) {
      if (cur < v) return;
    }
    auto s = orbit_sum(v, sigma);
    if (span.add(*integer_vector(s, index))) out.push_back({std::move(s), sigma, std::move(seq), Part::base});
  };
  const auto swap = Permutation::from_cycles(p, {{1, 2}});
  for (const auto& v : index.votes()) {
    if (static_cast<long long>(out.size()) == target) break;
    offer(v, swap, {{1}, {2}, {1}});
  }
  for (int c = 3; c <= p && static_cast<long long>(out.size()) < target; ++c) {
    const auto cyc = Permutation::from_cycles(p, {{1, 2, c}});
    for (const auto& v : index.votes()) {
      if (static_cast<long long>(out.size()) == target) break;
      offer(v, cyc, {{1}, {2}, {c}, {1}});
    }
  }
  // Swap pairs and 3-cycles stop short of the full kernel from p = 4 on;
  // the remaining elements come from orbits of other permutations sending
  // 1 to 2, in lexicographic order of their images.
  std::vector<int> images(p);
  for (int x = 0; x < p; ++x) images[x] = x + 1;
  std::swap(images[0], images[1]);
  std::sort(images.begin() + 1, images.end());
  do {
    if (static_cast<long long>(out.size()) == target) break;
    const Permutation sigma(images);
    std::vector<Committee> seq = {{1}};
    for (int x = sigma(1); x != 1; x = sigma(x)) seq.push_back({x});
    seq.push_back({1});
    for (const auto& v : index.votes()) {
      if (static_cast<long long>(out.size()) == target) break;
      offer(v, sigma, seq);
    }
  } while (std::next_permutation(images.begin() + 1, images.end()));
  if (static_cast<long long>(out.size()) != target) {
    throw std::logic_error("base kernel basis for m=" + std::to_string(p) + " reached only " +
                           std::to_string(out.size()) + " of " + std::to_string(target) + " elements");
  }
  return out;
}

// Canonical labels: C1 = {1..j}, C2 = {2..j, j+1}; a_1 = 1, a_1' = j+1, a_j = j.
std::vector<SymmetricBasisElement> canonical_basis(int p, int j) {
  if (j == 1) return base_basis(p);
  const auto reduced = canonical_basis(p - 1, j - 1);
  auto lift = [j](int x) { return x < j ? x : x + 1; };
  std::vector<SymmetricBasisElement> out;

  for (const auto& e : reduced) {
    std::vector<int> sigma_images(p);
    for (int x = 1; x <= p - 1; ++x) sigma_images[lift(x) - 1] = lift(e.sigma(x));
    sigma_images[j - 1] = j;
    const Permutation sigma(sigma_images);
    std::vector<Committee> seq;
    for (const auto& f : e.sequence) {
      Committee g;
      for (int x : f) g.push_back(lift(x));
      g.push_back(j);
      std::sort(g.begin(), g.end());
      seq.push_back(std::move(g));
    }
    for (int r = 1; r <= p; ++r) {
      VotingSituation s(p);
      for (const auto& [v, q] : e.situation) {
        std::vector<int> order;
        for (int x : v.order()) order.push_back(lift(x));
        order.insert(order.begin() + (r - 1), j);
        s.add(Vote(std::move(order)), q);
      }
      out.push_back({std::move(s), sigma, seq, Part::insert});
    }
  }

  const Committee c1 = range_set(1, j);
  Committee c2 = range_set(2, j);
  c2.push_back(j + 1);
  Committee c3 = range_set(1, j - 1);
  c3.push_back(j + 1);
  const auto tau = Permutation::from_cycles(p, {{1, j, j + 1}});
  for (int r = 2; r <= p; ++r) {
    PositionPath path = r <= p - 1 ? johnson_path_restricted(j - 1, p - 1, r) : johnson_path(j - 1, p - 1);
    for (auto& x : path) {
      for (int& e : x) {
        if (e >= r) ++e;
      }
    }
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
      const auto shared = set_intersection(path[t], path[t + 1]);
      auto diff = set_difference(path[t], path[t + 1]);
      const auto other = set_difference(path[t + 1], path[t]);
      diff.push_back(other.front());
      std::sort(diff.begin(), diff.end());
      const int b = diff[0];
      const int b2 = diff[1];
      std::vector<int> order(p, 0);
      order[r - 1] = j;
      for (std::size_t i = 0; i < shared.size(); ++i) order[shared[i] - 1] = static_cast<int>(i) + 2;
      order[b - 1] = 1;
      order[b2 - 1] = j + 1;
      int next = j + 2;
      for (int& slot : order) {
        if (slot == 0) slot = next++;
      }
      const Vote v(order);
      if (b < r && b2 < r) {
        out.push_back({orbit_sum(v, tau), tau, {c1, c2, c3, c1}, Part::distinctive});
      } else {
        // Highest-ranked member of a_2..a_{j-1} ahead of a_j.
        int a = 0;
        for (int rank = 1; rank < r && a == 0; ++rank) {
          if (v.at(rank) >= 2 && v.at(rank) <= j - 1) a = v.at(rank);
        }
        if (a == 0) throw std::logic_error("distinctive vote has no eligible candidate ahead of the inserted member");
        const auto rho = Permutation::from_cycles(p, {{1, j + 1}, {a, j}});
        out.push_back({orbit_sum(v, rho), rho, {c1, c2, c1}, Part::distinctive});
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(SymmetricBasisElement::Part part) {
  switch (part) {
    case Part::base:
      return "base";
    case Part::insert:
      return "B1";
    case Part::distinctive:
      return "B2";
  }
  return "unknown";
}

long long expected_insert_count(int p, int j) { return factorial(p) - p * binomial(p - 1, j - 1) + p; }

long long expected_distinctive_count(int p, int j) {
  return p * binomial(p - 1, j - 1) * (j - 1) / j - (p - 1);
}

bool verify_symmetric_situation(const SymmetricBasisElement& elem, const Committee& c1, const Committee& c2) {
  const auto& f = elem.sequence;
  if (f.size() < 3 || f.front() != c1 || f.back() != c1 || f[1] != c2) return false;
  if (elem.sigma.m() != elem.situation.m()) return false;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (apply_permutation(elem.sigma, f[i]) != f[i + 1]) return false;
  }
  return apply_permutation(elem.sigma, elem.situation) == elem.situation;
}

KernelBasis kernel_basis_symmetric(int m, const Committee& c1, const Committee& c2, int max_m) {
  const int k = static_cast<int>(c1.size());
  if (k < 1 || static_cast<int>(c2.size()) != k || c1 == c2 ||
      static_cast<int>(set_intersection(c1, c2).size()) != k - 1) {
    throw DomainError("kernel_basis_symmetric requires distinct committees of equal size sharing k-1 members");
  }
  for (int x : c1) {
    if (x < 1 || x > m) throw DomainError("committee member out of range");
  }
  for (int x : c2) {
    if (x < 1 || x > m) throw DomainError("committee member out of range");
  }
  if (m > max_m) throw ResourceError("kernel basis enumeration capped at m <= " + std::to_string(max_m));

  // pi sends canonical labels to the requested committees.
  std::vector<int> images(m, 0);
  const auto shared = set_intersection(c1, c2);
  images[0] = set_difference(c1, c2).front();
  images[k] = set_difference(c2, c1).front();
  for (int i = 0; i < k - 1; ++i) images[i + 1] = shared[i];
  std::vector<char> used(m + 1, 0);
  for (int x : images) used[x] = 1;
  int next = 1;
  for (int i = k + 1; i < m; ++i) {
    while (used[next]) ++next;
    images[i] = next;
    used[next] = 1;
  }
  const Permutation pi(images);
  const Permutation pi_inv = pi.inverse();

  KernelBasis basis;
  basis.m = m;
  basis.c1 = c1;
  basis.c2 = c2;
  for (auto& e : canonical_basis(m, k)) {
    SymmetricBasisElement mapped;
    mapped.situation = apply_permutation(pi, e.situation);
    mapped.sigma = pi.compose(e.sigma).compose(pi_inv);
    for (const auto& f : e.sequence) mapped.sequence.push_back(apply_permutation(pi, f));
    mapped.part = e.part;
    switch (e.part) {
      case Part::base:
        ++basis.base_count;
        break;
      case Part::insert:
        ++basis.insert_count;
        break;
      case Part::distinctive:
        ++basis.distinctive_count;
        break;
    }
    basis.elements.push_back(std::move(mapped));
  }

  const long long expected = factorial(m) - binomial(m, k) + 1;
  if (static_cast<long long>(basis.elements.size()) != expected) {
    throw std::logic_error("kernel basis has " + std::to_string(basis.elements.size()) + " elements, expected " +
                           std::to_string(expected));
  }
  if (k >= 2 && (static_cast<long long>(basis.insert_count) != expected_insert_count(m, k) ||
                 static_cast<long long>(basis.distinctive_count) != expected_distinctive_count(m, k))) {
    throw std::logic_error("kernel basis part sizes do not match the closed forms");
  }
  std::vector<VotingSituation> situations;
  for (const auto& e : basis.elements) {
    if (!verify_symmetric_situation(e, c1, c2)) throw std::logic_error("kernel basis element failed its witness check");
    const auto a = alpha(c1, c2, e.situation);
    if (!std::all_of(a.begin(), a.end(), [](const Rational& q) { return q.is_zero(); })) {
      throw std::logic_error("kernel basis element outside the kernel");
    }
    situations.push_back(e.situation);
  }
  const VoteIndex index(m, max_m);
  if (static_cast<long long>(certified_rank(situations, index)) != expected) {
    throw std::logic_error("kernel basis elements are linearly dependent");
  }
  return basis;
}

}  // namespace csr
