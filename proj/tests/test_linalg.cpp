#include <doctest.h>

#include <algorithm>

#include "csr/combinat.hpp"
#include "csr/errors.hpp"
#include "csr/linalg.hpp"
#include "csr/scoring.hpp"
#include "test_support.hpp"

using namespace csr;
using testing::set_of;
using testing::situation_of;
using testing::SplitMix;
using testing::vote_of;

namespace {

// Ranks of the committee members, read off by scanning the vote.
CommitteePosition scan_ranks(const Vote& v, const Committee& c) {
  CommitteePosition out;
  for (int r = 1; r <= v.m(); ++r)
    if (std::find(c.begin(), c.end(), v.order()[r - 1]) != c.end()) out.push_back(r);
  return out;
}

RationalVector brute_alpha(const Committee& c1, const Committee& c2, const VotingSituation& p, int k) {
  const auto positions = enumerate_positions(p.m(), k);
  RationalVector out(positions.size());
  for (const auto& [v, q] : p) {
    const auto i1 = scan_ranks(v, c1);
    const auto i2 = scan_ranks(v, c2);
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] == i1) out[i] += q;
      if (positions[i] == i2) out[i] -= q;
    }
  }
  return out;
}

Rational sum(const RationalVector& v) {
  Rational s(0);
  for (const auto& x : v) s += x;
  return s;
}

RationalVector unit(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v[i] = Rational(1);
  return v;
}

}  // namespace

TEST_CASE("rank and nullspace basics") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(nullspace(RationalMatrix::identity(3)).empty());
  const RationalMatrix zero(2, 3);
  CHECK(rank(zero) == 0);
  CHECK(nullspace(zero).size() == 3);

  const auto m = RationalMatrix::from_rows({{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}}, 3);
  CHECK(rank(m) == 1);
  for (const auto& x : nullspace(m)) CHECK(x[0] + Rational(2) * x[1] + Rational(3) * x[2] == Rational(0));
  CHECK_THROWS_AS(RationalMatrix::from_rows({{Rational(1)}, {Rational(1), Rational(2)}}, 2), DomainError);
}

TEST_CASE("rref produces reduced rows") {
  const auto m = RationalMatrix::from_rows(
      {{Rational(0), Rational(2), Rational(4)}, {Rational(1), Rational(1), Rational(1)}, {Rational(1), Rational(3), Rational(5)}}, 3);
  const auto e = rref(m);
  CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced(0, 0) == Rational(1));
  CHECK(e.reduced(1, 0) == Rational(0));
  CHECK(e.reduced(0, 1) == Rational(0));
  CHECK(e.reduced(0, 2) == Rational(-1));
  CHECK(e.reduced(1, 2) == Rational(2));
  for (std::size_t c = 0; c < 3; ++c) CHECK(e.reduced(2, c) == Rational(0));
}

TEST_CASE("rank plus nullity equals the column count") {
  SplitMix gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(gen.between(1, 6));
    const auto cols = static_cast<std::size_t>(gen.between(1, 6));
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (gen.below(3) > 0) m(r, c) = Rational(gen.between(-3, 3), gen.between(1, 3));
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == cols);
    for (const auto& x : ns) {
      for (std::size_t r = 0; r < rows; ++r) {
        Rational dot(0);
        for (std::size_t c = 0; c < cols; ++c) dot += m(r, c) * x[c];
        CHECK(dot == Rational(0));
      }
    }
  }
}

TEST_CASE("incremental basis") {
  IncrementalBasis b(3);
  CHECK(b.add(unit(3, 0)));
  CHECK(b.add({Rational(1), Rational(1), Rational(0)}));
  CHECK_FALSE(b.add({Rational(2), Rational(-3), Rational(0)}));
  CHECK(b.in_span(unit(3, 1)));
  CHECK_FALSE(b.in_span(unit(3, 2)));
  CHECK(b.size() == 2);
  CHECK(rank_of_vectors({unit(3, 0), unit(3, 0), unit(3, 2)}, 3) == 2);
}

TEST_CASE("vote index") {
  const VoteIndex index(3);
  CHECK(index.size() == 6);
  CHECK(index.index(vote_of("abc")) == 0);
  CHECK(index.index(vote_of("cba")) == 5);
  const auto p = situation_of(3, {{"bca", Rational(1, 2)}, {"acb", -2}});
  CHECK(index.to_situation(index.to_vector(p)) == p);
  CHECK_THROWS_AS(VoteIndex(9), ResourceError);
}

TEST_CASE("position weights") {
  const auto one = situation_of(4, {{"abcd", 1}});
  CHECK(pos_weight({1, 2}, set_of("ab"), one) == Rational(1));
  CHECK(pos_weight({1, 3}, set_of("ab"), one) == Rational(0));
  CHECK(pos_weight({1}, set_of("a"), null_profile(3)) == Rational(2));
  CHECK_THROWS_AS(pos_weight({1, 2}, set_of("ad"), VotingSituation(3)), DomainError);
  CHECK_THROWS_AS(pos_weight({1, 5}, set_of("ab"), one), DomainError);
  CHECK_THROWS_AS(pos_weight({1}, set_of("ab"), one), DomainError);
}

TEST_CASE("alpha examples") {
  const auto one = situation_of(4, {{"abcd", 1}});
  const auto a = alpha(set_of("ab"), set_of("cd"), one);
  REQUIRE(a.size() == 6);
  CHECK(a[0] == Rational(1));
  CHECK(a[5] == Rational(-1));
  for (std::size_t i = 1; i < 5; ++i) CHECK(a[i] == Rational(0));
  for (const auto& x : alpha(set_of("bc"), set_of("bc"), one)) CHECK(x == Rational(0));
  CHECK_THROWS_AS(alpha(set_of("ab"), set_of("c"), one), DomainError);
}

TEST_CASE("alpha matches a direct count, sums to zero and is linear") {
  SplitMix gen(62);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = gen.between(2, 6);
    const int k = gen.between(1, m);
    const auto c1 = gen.committee(m, k);
    const auto c2 = gen.committee(m, k);
    const auto p = gen.rational_situation(m, 5);
    const auto q = gen.rational_situation(m, 5);
    const Rational r(gen.between(-4, 4), gen.between(1, 4));
    const auto ap = alpha(c1, c2, p);
    CHECK(ap == brute_alpha(c1, c2, p, k));
    CHECK(sum(ap) == Rational(0));
    const auto aq = alpha(c1, c2, q);
    const auto combined = alpha(c1, c2, combine(p, scale(r, q)));
    for (std::size_t i = 0; i < ap.size(); ++i) CHECK(combined[i] == ap[i] + r * aq[i]);
  }
}

TEST_CASE("alpha over all unit situations, m = 3, k = 1") {
  const VoteIndex index(3);
  const auto mat = alpha_matrix(3, {1}, {2}, index);
  CHECK(mat.rows() == 3);
  CHECK(mat.cols() == 6);
  CHECK(rank(mat) == 2);
  CHECK(nullspace(mat).size() == 4);
}

TEST_CASE("alpha range bases") {
  const auto b31 = alpha_range_basis(3, {1}, {2});
  CHECK(b31.size() == 2);
  const auto b42 = alpha_range_basis(4, {1, 2}, {1, 3});
  CHECK(b42.size() == 5);
  CHECK_THROWS_AS(alpha_range_basis(4, {1, 2}, {3, 4}), DomainError);

  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k < m; ++k) {
      Committee c1, c2;
      for (int x = 1; x <= k; ++x) c1.push_back(x);
      c2 = c1;
      c2.back() = k + 1;
      const auto basis = alpha_range_basis(m, c1, c2);
      CHECK(static_cast<long long>(basis.size()) == binomial(m, k) - 1);
      std::vector<RationalVector> images;
      for (const auto& p : basis) {
        CHECK(p.support_size() == 1);
        images.push_back(alpha(c1, c2, p));
      }
      CHECK(static_cast<long long>(rank_of_vectors(images, images.front().size())) == binomial(m, k) - 1);
    }
  }
}

TEST_CASE("the alpha range has codimension one") {
  // Sum-zero vectors form the whole range: rank over all unit situations.
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 2}}) {
    Committee c1, c2;
    for (int x = 1; x <= k; ++x) c1.push_back(x);
    c2 = c1;
    c2.back() = k + 1;
    const VoteIndex index(m);
    const auto mat = alpha_matrix(m, c1, c2, index);
    CHECK(static_cast<long long>(rank(mat)) == binomial(m, k) - 1);
    CHECK(static_cast<long long>(nullspace(mat).size()) == factorial(m) - binomial(m, k) + 1);
  }
}

TEST_CASE("equal-score hyperplanes") {
  SplitMix gen(63);
  std::vector<VotingSituation> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(gen.rational_situation(3, 3));
  sample.push_back(null_profile(3));

  const auto borda = equivalence_hyperplane_check(builtin("k-borda", 3, 1), {1}, {2}, sample);
  CHECK_FALSE(borda.degenerate);
  CHECK(borda.functional_rank == 1);
  CHECK(borda.linear_on_sample);
  CHECK(borda.on_hyperplane >= 1);
  // Functional entry at vote v is the score difference on v alone.
  const VoteIndex index(3);
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto& v = index.votes()[i];
    const Rational diff = Rational(3 - scan_ranks(v, {1}).front()) - Rational(3 - scan_ranks(v, {2}).front());
    CHECK(borda.functional[i] == diff);
  }

  const auto flat = equivalence_hyperplane_check(CommitteeScoringFunction(3, 1, {Rational(4), Rational(4), Rational(4)}),
                                                 {1}, {2}, sample);
  CHECK(flat.degenerate);
  CHECK(flat.functional_rank == 0);
  CHECK(flat.on_hyperplane == sample.size());
}

TEST_CASE("beta statistic counts placements") {
  // Shared member 1 at rank 1; C1 \ {1} = {2}, C2 \ {1} = {3}.
  const auto p = situation_of(3, {{"abc", 2}, {"acb", 1}, {"bac", 5}});
  CHECK(beta_stat({1, 2}, {1, 3}, 1, 1, {2}, p) == Rational(2 - 1));
  CHECK(beta_stat({1, 2}, {1, 3}, 1, 1, {3}, p) == Rational(1 - 2));
  CHECK(beta_stat({1, 2}, {1, 3}, 1, 2, {1}, p) == Rational(5));
  CHECK_THROWS_AS(beta_stat({1, 2}, {1, 3}, 2, 1, {2}, p), DomainError);
}
