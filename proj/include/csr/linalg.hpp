#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csr/core.hpp"
#include "csr/scoring.hpp"

namespace csr {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Every row must have the same length.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;
  static RationalMatrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Among the
/// candidate pivots of a column, the entry with the smallest numerator and
/// denominator sizes is chosen to limit coefficient growth.
RowEchelon rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Basis of {x : Mx = 0}, one vector per free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);
std::size_t rank_of_vectors(const std::vector<RationalVector>& vectors, std::size_t dim);

/// Incrementally maintained echelon basis: answers whether a new vector is
/// independent of those accepted so far.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}
  /// Adds `v` if it is independent of the current span; returns whether it was added.
  bool add(const RationalVector& v);
  std::size_t size() const { return rows_.size(); }
  bool in_span(const RationalVector& v) const;

 private:
  RationalVector reduce(RationalVector v) const;

  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates of Q^{m!}: the votes in lexicographic order.
class VoteIndex {
 public:
  explicit VoteIndex(int m, int max_m = kDefaultMaxEnumerationM);
  int m() const { return m_; }
  std::size_t size() const { return votes_.size(); }
  const std::vector<Vote>& votes() const { return votes_; }
  std::size_t index(const Vote& v) const;
  RationalVector to_vector(const VotingSituation& p) const;
  VotingSituation to_situation(const RationalVector& x) const;

 private:
  int m_;
  std::vector<Vote> votes_;
  std::map<Vote, std::size_t> index_;
};

/// Total multiplicity of votes in which C sits exactly at positions I.
Rational pos_weight(const CommitteePosition& i, const Committee& c, const VotingSituation& p);

/// α_{C1,C2}(P), indexed like enumerate_positions(m, k).
RationalVector alpha(const Committee& c1, const Committee& c2, const VotingSituation& p);

/// C(m,k) x m! matrix whose column v is α of the single vote v.
RationalMatrix alpha_matrix(int m, const Committee& c1, const Committee& c2, const VoteIndex& index);

/// One vote per edge (I, I') of the Johnson path of [m]_k, placing C1 at I
/// and C2 at I'. Requires |C1 ∩ C2| = k-1.
std::vector<VotingSituation> alpha_range_basis(int m, const Committee& c1, const Committee& c2);

struct HyperplaneCheck {
  /// λ gives C1 and C2 equal scores on every situation.
  bool degenerate = false;
  /// Rank of the score-difference functional over Q^{m!} (0 or 1).
  std::size_t functional_rank = 0;
  /// The functional reproduces score(C1) - score(C2) on every sample.
  bool linear_on_sample = true;
  /// Samples lying on the hyperplane (equal scores).
  std::size_t on_hyperplane = 0;
  RationalVector functional;
};

/// The tie set {P : score(C1,P) = score(C2,P)} as the kernel of one linear
/// functional on Q^{m!}, cross-checked against direct scoring on `sample`.
HyperplaneCheck equivalence_hyperplane_check(const CommitteeScoringFunction& lambda, const Committee& c1,
                                             const Committee& c2, const std::vector<VotingSituation>& sample);

/// Diagnostic: (votes with `pivot` at rank r and C1 \ {pivot} at ranks R)
/// minus (votes with `pivot` at rank r and C2 \ {pivot} at ranks R).
/// `pivot` must be a shared member of C1 and C2.
Rational beta_stat(const Committee& c1, const Committee& c2, int pivot, int r, const CommitteePosition& ranks,
                   const VotingSituation& p);

}  // namespace csr
