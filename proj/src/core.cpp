#include "csr/core.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

#include "csr/errors.hpp"

namespace csr {

namespace {

bool is_permutation_of_range(const std::vector<int>& xs) {
  std::vector<char> seen(xs.size() + 1, 0);
  for (int x : xs) {
    if (x < 1 || x > static_cast<int>(xs.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

void require_same_m(int a, int b, const char* what) {
  if (a != b) {
    throw DomainError(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
  }
}

}  // namespace

Vote::Vote(std::vector<int> order) : order_(std::move(order)) {
  if (!is_permutation_of_range(order_)) throw DomainError("vote is not a ranking of 1..m");
  rank_.assign(order_.size(), 0);
  for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i] - 1] = static_cast<int>(i) + 1;
}

Vote Vote::identity(int m) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 1);
  return Vote(std::move(order));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_permutation_of_range(images_)) throw DomainError("permutation is not a bijection on 1..m");
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(m);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<int> images = identity(m).images_;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      const int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > m || to < 1 || to > m) throw DomainError("cycle entry out of range");
      images[from - 1] = to;
    }
    result = Permutation(std::move(images)).compose(result);
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  require_same_m(m(), other.m(), "compose");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(out));
}

void VotingSituation::add(const Vote& v, const Rational& q) {
  require_same_m(m_, v.m(), "situation add");
  if (q.is_zero()) return;
  auto [it, inserted] = counts_.try_emplace(v, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) counts_.erase(it);
  }
}

Rational VotingSituation::count(const Vote& v) const {
  auto it = counts_.find(v);
  return it == counts_.end() ? Rational(0) : it->second;
}

Rational VotingSituation::total() const {
  Rational sum;
  for (const auto& [v, q] : counts_) sum += q;
  return sum;
}

bool VotingSituation::is_natural() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](const auto& e) { return e.second.is_integer() && e.second.sign() > 0; });
}

void Profile::add(int voter, const Vote& vote) {
  require_same_m(m_, vote.m(), "profile add");
  for (const auto& b : ballots_) {
    if (b.voter == voter) throw DomainError("duplicate voter id " + std::to_string(voter));
  }
  ballots_.push_back({voter, vote});
}

VotingSituation Profile::to_situation() const {
  VotingSituation s(m_);
  for (const auto& b : ballots_) s.add(b.vote, 1);
  return s;
}

Committee make_committee(int m, int k, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (static_cast<int>(members.size()) != k) {
    throw DomainError("committee must have exactly " + std::to_string(k) + " members");
  }
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw DomainError("committee has a repeated member");
  }
  for (int c : members) {
    if (c < 1 || c > m) throw DomainError("unknown candidate id " + std::to_string(c));
  }
  return members;
}

int position_of_candidate(const Vote& v, Candidate a) {
  if (a < 1 || a > v.m()) throw DomainError("unknown candidate id " + std::to_string(a));
  return v.rank_of(a);
}

CommitteePosition position_of_committee(const Vote& v, const Committee& c) {
  CommitteePosition out;
  out.reserve(c.size());
  for (int a : c) out.push_back(position_of_candidate(v, a));
  std::sort(out.begin(), out.end());
  return out;
}

Vote apply_permutation(const Permutation& sigma, const Vote& v) {
  require_same_m(sigma.m(), v.m(), "apply_permutation");
  std::vector<int> order(v.order().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = sigma(v.order()[i]);
  return Vote(std::move(order));
}

Committee apply_permutation(const Permutation& sigma, const Committee& c) {
  Committee out;
  out.reserve(c.size());
  for (int a : c) {
    if (a < 1 || a > sigma.m()) throw DomainError("apply_permutation: candidate out of range");
    out.push_back(sigma(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VotingSituation apply_permutation(const Permutation& sigma, const VotingSituation& p) {
  require_same_m(sigma.m(), p.m(), "apply_permutation");
  VotingSituation out(p.m());
  for (const auto& [v, q] : p) out.add(apply_permutation(sigma, v), q);
  return out;
}

VotingSituation combine(const VotingSituation& p, const VotingSituation& q) {
  require_same_m(p.m(), q.m(), "combine");
  VotingSituation out = p;
  for (const auto& [v, c] : q) out.add(v, c);
  return out;
}

VotingSituation scale(const Rational& q, const VotingSituation& p) {
  VotingSituation out(p.m());
  for (const auto& [v, c] : p) out.add(v, q * c);
  return out;
}

std::vector<Vote> all_votes(int m, int max_m) {
  if (m < 1) throw DomainError("m must be positive");
  if (m > max_m) {
    throw ResourceError("enumerating all votes for m=" + std::to_string(m) + " exceeds cap m<=" +
                        std::to_string(max_m));
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 1);
  std::vector<Vote> out;
  out.reserve(static_cast<std::size_t>(factorial(m)));
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

VotingSituation null_profile(int m, int max_m) {
  VotingSituation e(m);
  for (const auto& v : all_votes(m, max_m)) e.add(v, 1);
  return e;
}

Vote place_committees(int m, const Committee& c1, const CommitteePosition& i1, const Committee& c2,
                      const CommitteePosition& i2) {
  if (c1.size() != i1.size() || c2.size() != i2.size()) {
    throw DomainError("placement: committee and position sizes differ");
  }
  const auto shared_c = set_intersection(c1, c2);
  const auto shared_i = set_intersection(i1, i2);
  if (shared_c.size() != shared_i.size()) {
    throw DomainError("placement: committee overlap does not match position overlap");
  }
  std::vector<int> order(m, 0);
  std::vector<char> used(m + 1, 0);
  auto put = [&](const std::vector<int>& cands, const std::vector<int>& ranks) {
    for (std::size_t t = 0; t < cands.size(); ++t) {
      const int r = ranks[t];
      const int c = cands[t];
      if (r < 1 || r > m || c < 1 || c > m) throw DomainError("placement: value out of range");
      if (order[r - 1] != 0 || used[c]) throw DomainError("placement: conflicting assignment");
      order[r - 1] = c;
      used[c] = 1;
    }
  };
  put(shared_c, shared_i);
  put(set_difference(c1, c2), set_difference(i1, i2));
  put(set_difference(c2, c1), set_difference(i2, i1));
  int next = 1;
  for (int r = 0; r < m; ++r) {
    if (order[r] != 0) continue;
    while (used[next]) ++next;
    order[r] = next;
    used[next] = 1;
  }
  return Vote(std::move(order));
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace csr
