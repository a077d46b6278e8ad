#pragma once

#include <optional>
#include <vector>

#include "qspencer/exact.hpp"

namespace qsp {

using Vec = std::vector<Rational>;

// Dense matrix of rationals, row major.  Every operation is exact; ranks and
// kernels come from fraction-free (Bareiss) elimination with deterministic
// pivoting (first nonzero row in column order), so results are reproducible
// bit for bit.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static ExactMatrix identity(long n);
  static ExactMatrix from_columns(long rows, const std::vector<Vec>& cols);
  static ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Rational& at(long r, long c) { return e_[r * cols_ + c]; }
  const Rational& at(long r, long c) const { return e_[r * cols_ + c]; }

  Vec column(long c) const;
  Vec apply(const Vec& x) const;  // matrix * vector
  ExactMatrix multiply(const ExactMatrix& o) const;
  ExactMatrix transpose() const;
  ExactMatrix select_columns(const std::vector<long>& idx) const;
  bool is_zero() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

long rank(const ExactMatrix& m);

// Basis of {x : m x = 0}; size is cols - rank.
std::vector<Vec> kernel_basis(const ExactMatrix& m);

// Coefficients c with span c = v when v lies in the column span, else nullopt.
std::optional<Vec> membership(const Vec& v, const ExactMatrix& span);

// Indices of the first linearly independent columns (a column-space basis).
std::vector<long> column_space_pivots(const ExactMatrix& m);

bool same_column_span(const ExactMatrix& a, const ExactMatrix& b);

// Matrix of the map induced by f on source/sub_source -> target/sub_target,
// in the lexicographically first complement bases.  Throws if f does not map
// sub_source into sub_target.
ExactMatrix induced_quotient_map(const ExactMatrix& f,
                                 const ExactMatrix& sub_source,
                                 const ExactMatrix& sub_target);

// One-time Gauss-Jordan factorization of A, reusable for many solves.
class LinearSolver {
 public:
  explicit LinearSolver(const ExactMatrix& a);
  long rank() const { return static_cast<long>(pivot_cols_.size()); }
  const std::vector<long>& pivot_columns() const { return pivot_cols_; }
  // A solution of A x = b, or nullopt when b is outside the column span.
  // Free variables are set to zero, so the solution is deterministic.
  std::optional<Vec> solve(const Vec& b) const;

 private:
  long rows_ = 0, cols_ = 0;
  ExactMatrix rref_;       // reduced row echelon form of A
  ExactMatrix row_ops_;    // E with E A = rref
  std::vector<long> pivot_cols_;
};

}  // namespace qsp
