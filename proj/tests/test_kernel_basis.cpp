#include <doctest.h>

#include "csr/combinat.hpp"
#include "csr/errors.hpp"
#include "csr/kernel_basis.hpp"
#include "csr/linalg.hpp"
#include "csr/scoring.hpp"
#include "test_support.hpp"

using namespace csr;
using testing::situation_of;
using testing::vote_of;

namespace {

struct Shape {
  int m;
  int k;
};

Committee first_k(int k) {
  Committee c;
  for (int x = 1; x <= k; ++x) c.push_back(x);
  return c;
}

Committee neighbour(int k) {
  auto c = first_k(k);
  c.back() = k + 1;
  return c;
}

}  // namespace

TEST_CASE("closed-form part sizes") {
  CHECK(expected_insert_count(4, 2) == 16);
  CHECK(expected_distinctive_count(4, 2) == 3);
  CHECK(expected_insert_count(4, 2) + expected_distinctive_count(4, 2) == factorial(4) - binomial(4, 2) + 1);
  for (int p = 2; p <= 8; ++p)
    for (int j = 2; j <= p - 1; ++j) {
      // The closing identity p! - C(p, j) + 1 of the two parts.
      CHECK(expected_insert_count(p, j) + expected_distinctive_count(p, j) == factorial(p) - binomial(p, j) + 1);
    }
}

TEST_CASE("three-vote rotation witness") {
  // C1 = {a,b}, C2 = {b,c}; τ sends a -> b -> c -> a.
  const auto tau = Permutation::from_cycles(3, {{1, 2, 3}});
  const Vote v = vote_of("acb");
  VotingSituation p(3);
  p.add(v, 1);
  p.add(apply_permutation(tau, v), 1);
  p.add(apply_permutation(tau, apply_permutation(tau, v)), 1);
  SymmetricBasisElement e{p, tau, {{1, 2}, {2, 3}, {1, 3}, {1, 2}}, SymmetricBasisElement::Part::distinctive};
  CHECK(verify_symmetric_situation(e, {1, 2}, {2, 3}));
  for (const auto& x : alpha({1, 2}, {2, 3}, p)) CHECK(x == Rational(0));

  SymmetricBasisElement broken = e;
  broken.situation.add(v, 1);
  CHECK_FALSE(verify_symmetric_situation(broken, {1, 2}, {2, 3}));
  SymmetricBasisElement short_seq = e;
  short_seq.sequence = {{1, 2}, {2, 3}};
  CHECK_FALSE(verify_symmetric_situation(short_seq, {1, 2}, {2, 3}));
}

TEST_CASE("two-vote double-swap witness") {
  // C1 = {a,b,c}, C2 = {b,c,d}; ρ swaps a with d and b with c.
  const auto rho = Permutation::from_cycles(5, {{1, 4}, {2, 3}});
  const Vote v = vote_of("bcead");
  VotingSituation p(5);
  p.add(v, 1);
  p.add(apply_permutation(rho, v), 1);
  SymmetricBasisElement e{p, rho, {{1, 2, 3}, {2, 3, 4}, {1, 2, 3}}, SymmetricBasisElement::Part::distinctive};
  CHECK(verify_symmetric_situation(e, {1, 2, 3}, {2, 3, 4}));
  for (const auto& x : alpha({1, 2, 3}, {2, 3, 4}, p)) CHECK(x == Rational(0));
  e.sigma = Permutation::identity(5);
  CHECK_FALSE(verify_symmetric_situation(e, {1, 2, 3}, {2, 3, 4}));
}

TEST_CASE("kernel bases have the right size, parts and span") {
  const std::vector<Shape> shapes = {{3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}, {5, 2}};
  const auto names = builtin_names();
  for (const auto& [m, k] : shapes) {
    CAPTURE(m);
    CAPTURE(k);
    const auto c1 = first_k(k);
    const auto c2 = neighbour(k);
    const auto basis = kernel_basis_symmetric(m, c1, c2);
    const long long dim = factorial(m) - binomial(m, k) + 1;
    CHECK(static_cast<long long>(basis.elements.size()) == dim);
    CHECK(basis.base_count + basis.insert_count + basis.distinctive_count == basis.elements.size());
    if (k == 1) {
      CHECK(static_cast<long long>(basis.base_count) == dim);
    } else {
      // The last inductive step (p = m, j = k) determines both parts.
      CHECK(basis.base_count == 0);
      CHECK(static_cast<long long>(basis.insert_count) == expected_insert_count(m, k));
      CHECK(static_cast<long long>(basis.distinctive_count) == expected_distinctive_count(m, k));
    }

    const VoteIndex index(m);
    std::vector<RationalVector> vectors;
    for (const auto& e : basis.elements) {
      CHECK(verify_symmetric_situation(e, c1, c2));
      CHECK(apply_permutation(e.sigma, e.situation) == e.situation);
      for (const auto& x : alpha(c1, c2, e.situation)) CHECK(x == Rational(0));
      for (const auto& name : names) {
        const auto lambda = builtin(name, m, k);
        CHECK(committee_score(lambda, c1, e.situation) == committee_score(lambda, c2, e.situation));
      }
      vectors.push_back(index.to_vector(e.situation));
    }
    CHECK(static_cast<long long>(rank_of_vectors(vectors, index.size())) == dim);

    // Same span as the exact nullspace: stacking both does not raise the rank.
    auto stacked = vectors;
    for (const auto& x : nullspace(alpha_matrix(m, c1, c2, index))) stacked.push_back(x);
    CHECK(static_cast<long long>(rank_of_vectors(stacked, index.size())) == dim);
  }
}

TEST_CASE("kernel basis part sizes at the top step, m = 4") {
  // With k = 2 there is a single inductive step at p = 4, j = 2.
  const auto basis = kernel_basis_symmetric(4, {1, 2}, {1, 3});
  CHECK(basis.insert_count == 16);
  CHECK(basis.distinctive_count == 3);
  CHECK(basis.base_count == 0);
}

TEST_CASE("kernel basis argument errors") {
  CHECK_THROWS_AS(kernel_basis_symmetric(4, {1, 2}, {3, 4}), DomainError);
  CHECK_THROWS_AS(kernel_basis_symmetric(4, {1, 2}, {1, 2}), DomainError);
  CHECK_THROWS_AS(kernel_basis_symmetric(7, {1, 2}, {1, 3}), ResourceError);
  CHECK(to_string(SymmetricBasisElement::Part::insert) == "B1");
}
