#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "csr/rational.hpp"

namespace csr {

/// Candidates are the integers 1..m. Display names only exist at the text
/// boundary (see profile_io.hpp).
using Candidate = int;

/// Sorted set of k candidate ids.
using Committee = std::vector<int>;

/// Sorted set of k ranks in 1..m, an element of [m]_k.
using CommitteePosition = std::vector<int>;

/// Default limit on m for operations that enumerate all m! votes.
inline constexpr int kDefaultMaxEnumerationM = 8;

/// A strict linear order over candidates 1..m; rank 1 is the top.
class Vote {
 public:
  Vote() = default;

  /// `order[i]` is the candidate at rank i+1. Throws DomainError unless
  /// `order` is a permutation of 1..m.
  explicit Vote(std::vector<int> order);

  static Vote identity(int m);

  int m() const { return static_cast<int>(order_.size()); }
  /// Candidate at a 1-based rank.
  int at(int rank) const { return order_[rank - 1]; }
  /// 1-based rank of a candidate, no bounds check.
  int rank_of(int candidate) const { return rank_[candidate - 1]; }
  const std::vector<int>& order() const { return order_; }

  friend bool operator==(const Vote& a, const Vote& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Vote& a, const Vote& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> rank_;
};

/// Bijection on 1..m, stored as the image list.
class Permutation {
 public:
  Permutation() = default;
  /// `images[i]` is the image of candidate i+1. Throws DomainError if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  /// Product of disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  int m() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (this ∘ other)(x) = this(other(x)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Anonymized profile with exact rational multiplicities (may be negative
/// or fractional). Only nonzero entries are stored.
class VotingSituation {
 public:
  using Map = std::map<Vote, Rational>;

  explicit VotingSituation(int m = 0) : m_(m) {}

  int m() const { return m_; }
  /// Adds `q` copies of `v`; entries that cancel to zero are dropped.
  void add(const Vote& v, const Rational& q);
  Rational count(const Vote& v) const;

  const Map& entries() const { return counts_; }
  Map::const_iterator begin() const { return counts_.begin(); }
  Map::const_iterator end() const { return counts_.end(); }
  std::size_t support_size() const { return counts_.size(); }
  bool is_zero() const { return counts_.empty(); }
  /// Sum of all multiplicities.
  Rational total() const;
  /// True iff every multiplicity is a nonnegative integer.
  bool is_natural() const;

  friend bool operator==(const VotingSituation&, const VotingSituation&) = default;

 private:
  int m_;
  Map counts_;
};

/// Ordered list of ballots; only used where voter identities matter.
class Profile {
 public:
  struct Ballot {
    int voter;
    Vote vote;
  };

  explicit Profile(int m = 0) : m_(m) {}

  int m() const { return m_; }
  /// Throws DomainError on a duplicate voter id or size mismatch.
  void add(int voter, const Vote& vote);
  const std::vector<Ballot>& ballots() const { return ballots_; }
  std::size_t size() const { return ballots_.size(); }

  VotingSituation to_situation() const;

 private:
  int m_;
  std::vector<Ballot> ballots_;
};

/// Validates and sorts a committee over 1..m with exactly k members.
Committee make_committee(int m, int k, std::vector<int> members);

int position_of_candidate(const Vote& v, Candidate a);
CommitteePosition position_of_committee(const Vote& v, const Committee& c);

Vote apply_permutation(const Permutation& sigma, const Vote& v);
Committee apply_permutation(const Permutation& sigma, const Committee& c);
VotingSituation apply_permutation(const Permutation& sigma, const VotingSituation& p);

VotingSituation combine(const VotingSituation& p, const VotingSituation& q);
VotingSituation scale(const Rational& q, const VotingSituation& p);

/// All m! votes in lexicographic order. Throws ResourceError above `max_m`.
std::vector<Vote> all_votes(int m, int max_m = kDefaultMaxEnumerationM);
/// Every vote once. Throws ResourceError above `max_m`.
VotingSituation null_profile(int m, int max_m = kDefaultMaxEnumerationM);

/// Single vote putting C1 at positions I1 and C2 at positions I2. Shared
/// members take the shared positions, all other candidates fill the free
/// positions in ascending id order. Throws DomainError if unrealizable.
Vote place_committees(int m, const Committee& c1, const CommitteePosition& i1,
                      const Committee& c2, const CommitteePosition& i2);

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);

long long factorial(int n);
long long binomial(int n, int k);

}  // namespace csr
