#include "csr/linalg.hpp"

#include <algorithm>

#include "csr/combinat.hpp"
#include "csr/errors.hpp"

namespace csr {

namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(q.raw().get_den_mpz_t(), 2);
}

}  // namespace

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = lead; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      if (!best || bit_size(m(r, c)) < bit_size(m(*best, c))) best = r;
    }
    if (!best) continue;
    if (*best != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(lead, j), m(*best, j));
    }
    const Rational inv = Rational(1) / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(lead, j).is_zero()) m(lead, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(lead, j).is_zero()) m(r, j) -= f * m(lead, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const auto ech = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : ech.pivot_columns) is_pivot[c] = 1;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(m.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) x[ech.pivot_columns[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank_of_vectors(const std::vector<RationalVector>& vectors, std::size_t dim) {
  IncrementalBasis basis(dim);
  for (const auto& v : vectors) basis.add(v);
  return basis.size();
}

RationalVector IncrementalBasis::reduce(RationalVector v) const {
  if (v.size() != dim_) throw DomainError("IncrementalBasis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Rational f = v[p];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
  }
  return v;
}

bool IncrementalBasis::in_span(const RationalVector& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q.is_zero(); });
}

bool IncrementalBasis::add(const RationalVector& v) {
  RationalVector r = reduce(v);
  const auto it = std::find_if(r.begin(), r.end(), [](const Rational& q) { return !q.is_zero(); });
  if (it == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  const Rational inv = Rational(1) / r[p];
  for (std::size_t j = p; j < dim_; ++j) {
    if (!r[j].is_zero()) r[j] *= inv;
  }
  // Keep rows fully reduced at their pivots so reduce() is a single pass.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Rational f = row[p];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!r[j].is_zero()) row[j] -= f * r[j];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

VoteIndex::VoteIndex(int m, int max_m) : m_(m), votes_(all_votes(m, max_m)) {
  for (std::size_t i = 0; i < votes_.size(); ++i) index_.emplace(votes_[i], i);
}

std::size_t VoteIndex::index(const Vote& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) throw DomainError("vote over a different candidate set");
  return it->second;
}

RationalVector VoteIndex::to_vector(const VotingSituation& p) const {
  if (p.m() != m_) throw DomainError("VoteIndex: m mismatch");
  RationalVector x(votes_.size());
  for (const auto& [v, q] : p) x[index(v)] = q;
  return x;
}

VotingSituation VoteIndex::to_situation(const RationalVector& x) const {
  if (x.size() != votes_.size()) throw DomainError("VoteIndex: dimension mismatch");
  VotingSituation p(m_);
  for (std::size_t i = 0; i < x.size(); ++i) p.add(votes_[i], x[i]);
  return p;
}

Rational pos_weight(const CommitteePosition& i, const Committee& c, const VotingSituation& p) {
  if (i.size() != c.size()) throw DomainError("pos_weight: position set and committee sizes differ");
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (c[t] < 1 || c[t] > p.m() || i[t] < 1 || i[t] > p.m()) {
      throw DomainError("pos_weight: committee or positions outside 1.." + std::to_string(p.m()));
    }
  }
  Rational w;
  for (const auto& [v, q] : p) {
    if (position_of_committee(v, c) == i) w += q;
  }
  return w;
}

RationalVector alpha(const Committee& c1, const Committee& c2, const VotingSituation& p) {
  if (c1.size() != c2.size() || c1.empty()) throw DomainError("alpha: committees must have equal positive size");
  const int m = p.m();
  RationalVector out(static_cast<std::size_t>(binomial(m, static_cast<int>(c1.size()))));
  for (const auto& [v, q] : p) {
    out[position_index(position_of_committee(v, c1), m)] += q;
    out[position_index(position_of_committee(v, c2), m)] -= q;
  }
  return out;
}

RationalMatrix alpha_matrix(int m, const Committee& c1, const Committee& c2, const VoteIndex& index) {
  const std::size_t rows = static_cast<std::size_t>(binomial(m, static_cast<int>(c1.size())));
  RationalMatrix a(rows, index.size());
  for (std::size_t col = 0; col < index.size(); ++col) {
    const auto& v = index.votes()[col];
    a(position_index(position_of_committee(v, c1), m), col) += 1;
    a(position_index(position_of_committee(v, c2), m), col) -= 1;
  }
  return a;
}

std::vector<VotingSituation> alpha_range_basis(int m, const Committee& c1, const Committee& c2) {
  const int k = static_cast<int>(c1.size());
  if (c1 == c2 || static_cast<int>(c2.size()) != k ||
      static_cast<int>(set_intersection(c1, c2).size()) != k - 1) {
    throw DomainError("alpha_range_basis requires distinct committees sharing k-1 members");
  }
  const auto path = johnson_path(k, m);
  std::vector<VotingSituation> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    VotingSituation p(m);
    p.add(place_committees(m, c1, path[i], c2, path[i + 1]), 1);
    out.push_back(std::move(p));
  }
  return out;
}

HyperplaneCheck equivalence_hyperplane_check(const CommitteeScoringFunction& lambda, const Committee& c1,
                                             const Committee& c2, const std::vector<VotingSituation>& sample) {
  HyperplaneCheck out;
  const VoteIndex index(lambda.m());
  out.functional.resize(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto& v = index.votes()[i];
    out.functional[i] = lambda(position_of_committee(v, c1)) - lambda(position_of_committee(v, c2));
  }
  out.functional_rank = rank(RationalMatrix::from_rows({out.functional}, index.size()));
  out.degenerate = out.functional_rank == 0;
  for (const auto& p : sample) {
    Rational dot;
    for (const auto& [v, q] : p) dot += q * out.functional[index.index(v)];
    const Rational direct = committee_score(lambda, c1, p) - committee_score(lambda, c2, p);
    if (dot != direct) out.linear_on_sample = false;
    if (direct.is_zero()) ++out.on_hyperplane;
  }
  return out;
}

Rational beta_stat(const Committee& c1, const Committee& c2, int pivot, int r, const CommitteePosition& ranks,
                   const VotingSituation& p) {
  if (!std::binary_search(c1.begin(), c1.end(), pivot) || !std::binary_search(c2.begin(), c2.end(), pivot)) {
    throw DomainError("beta_stat: pivot must belong to both committees");
  }
  const auto rest1 = set_difference(c1, {pivot});
  const auto rest2 = set_difference(c2, {pivot});
  Rational gamma;
  Rational gamma_prime;
  for (const auto& [v, q] : p) {
    if (v.rank_of(pivot) != r) continue;
    if (position_of_committee(v, rest1) == ranks) gamma += q;
    if (position_of_committee(v, rest2) == ranks) gamma_prime += q;
  }
  return gamma - gamma_prime;
}

}  // namespace csr
