#include "qspencer/matrix.hpp"

#include <algorithm>

namespace qsp {

ExactMatrix ExactMatrix::identity(long n) {
  ExactMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_columns(long rows, const std::vector<Vec>& cols) {
  ExactMatrix m(rows, static_cast<long>(cols.size()));
  for (long c = 0; c < m.cols_; ++c) {
    if (static_cast<long>(cols[c].size()) != rows)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (long r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hcat: row mismatch");
  ExactMatrix m(a.rows_, a.cols_ + b.cols_);
  for (long r = 0; r < a.rows_; ++r) {
    for (long c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (long c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
  }
  return m;
}

Vec ExactMatrix::column(long c) const {
  Vec v(rows_);
  for (long r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec ExactMatrix::apply(const Vec& x) const {
  if (static_cast<long>(x.size()) != cols_)
    throw std::invalid_argument("apply: size mismatch");
  Vec y(rows_);
  for (long r = 0; r < rows_; ++r) {
    Rational acc;
    for (long c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("multiply: size mismatch");
  ExactMatrix m(rows_, o.cols_);
  for (long r = 0; r < rows_; ++r)
    for (long k = 0; k < cols_; ++k) {
      const Rational& x = at(r, k);
      if (x.is_zero()) continue;
      for (long c = 0; c < o.cols_; ++c)
        if (!o.at(k, c).is_zero()) m.at(r, c) += x * o.at(k, c);
    }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<long>& idx) const {
  ExactMatrix m(rows_, static_cast<long>(idx.size()));
  for (long c = 0; c < m.cols_; ++c)
    for (long r = 0; r < rows_; ++r) m.at(r, c) = at(r, idx[c]);
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
}

namespace {

// Integer row echelon by Bareiss.  Rows of the rational input are scaled by
// the lcm of their denominators first; that changes neither rank, kernel nor
// pivot columns.  Returns the echelon rows and pivot columns.
struct IntEchelon {
  std::vector<std::vector<BigInt>> rows;
  std::vector<long> pivot_cols;  // pivot_cols[k] = column of pivot in rows[k]
};

IntEchelon bareiss(const ExactMatrix& m) {
  const long nr = m.rows(), nc = m.cols();
  std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
  for (long r = 0; r < nr; ++r) {
    BigInt l = 1;
    for (long c = 0; c < nc; ++c) l = lcm(l, m.at(r, c).denominator());
    for (long c = 0; c < nc; ++c)
      a[r][c] = m.at(r, c).numerator() * (l / m.at(r, c).denominator());
  }

  IntEchelon out;
  BigInt prev = 1;
  long row = 0;
  for (long col = 0; col < nc && row < nr; ++col) {
    long piv = -1;
    for (long r = row; r < nr; ++r)
      if (sgn(a[r][col]) != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (long r = row + 1; r < nr; ++r) {
      for (long c = col + 1; c < nc; ++c) {
        BigInt t = a[row][col] * a[r][c] - a[r][col] * a[row][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = t;
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rows.assign(a.begin(), a.begin() + row);
  return out;
}

}  // namespace

long rank(const ExactMatrix& m) {
  return static_cast<long>(bareiss(m).pivot_cols.size());
}

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  const long nc = m.cols();
  IntEchelon ech = bareiss(m);
  const long r = static_cast<long>(ech.pivot_cols.size());

  std::vector<bool> is_pivot(nc, false);
  for (long c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (long f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    Vec x(nc);
    x[f] = 1;
    for (long k = r - 1; k >= 0; --k) {
      const long pc = ech.pivot_cols[k];
      Rational acc;
      for (long c = pc + 1; c < nc; ++c)
        if (!x[c].is_zero() && sgn(ech.rows[k][c]) != 0)
          acc += Rational(ech.rows[k][c], BigInt(1)) * x[c];
      x[pc] = -acc / Rational(ech.rows[k][pc], BigInt(1));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<long> column_space_pivots(const ExactMatrix& m) {
  return bareiss(m).pivot_cols;
}

bool same_column_span(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const long ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  return rank(ExactMatrix::hcat(a, b)) == ra;
}

LinearSolver::LinearSolver(const ExactMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), rref_(a), row_ops_(ExactMatrix::identity(a.rows())) {
  long row = 0;
  for (long col = 0; col < cols_ && row < rows_; ++col) {
    long piv = -1;
    for (long r = row; r < rows_; ++r)
      if (!rref_.at(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (long c = 0; c < cols_; ++c) std::swap(rref_.at(row, c), rref_.at(piv, c));
    if (piv != row)
      for (long c = 0; c < rows_; ++c) std::swap(row_ops_.at(row, c), row_ops_.at(piv, c));
    const Rational inv = Rational(1) / rref_.at(row, col);
    for (long c = 0; c < cols_; ++c) rref_.at(row, c) *= inv;
    for (long c = 0; c < rows_; ++c) row_ops_.at(row, c) *= inv;
    for (long r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Rational f = rref_.at(r, col);
      if (f.is_zero()) continue;
      for (long c = 0; c < cols_; ++c)
        if (!rref_.at(row, c).is_zero()) rref_.at(r, c) -= f * rref_.at(row, c);
      for (long c = 0; c < rows_; ++c)
        if (!row_ops_.at(row, c).is_zero()) row_ops_.at(r, c) -= f * row_ops_.at(row, c);
    }
    pivot_cols_.push_back(col);
    ++row;
  }
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  if (static_cast<long>(b.size()) != rows_)
    throw std::invalid_argument("solve: size mismatch");
  Vec bb = row_ops_.apply(b);
  const long r = rank();
  for (long i = r; i < rows_; ++i)
    if (!bb[i].is_zero()) return std::nullopt;
  Vec x(cols_);
  for (long k = 0; k < r; ++k) x[pivot_cols_[k]] = bb[k];
  return x;
}

std::optional<Vec> membership(const Vec& v, const ExactMatrix& span) {
  if (static_cast<long>(v.size()) != span.rows())
    throw std::invalid_argument("membership: length mismatch");
  return LinearSolver(span).solve(v);
}

namespace {

// Standard-basis indices completing span to the ambient space, greedily in
// index order.
std::vector<long> lex_complement(const ExactMatrix& span) {
  const long n = span.rows();
  ExactMatrix aug = ExactMatrix::hcat(span, ExactMatrix::identity(n));
  std::vector<long> comp;
  for (long p : column_space_pivots(aug))
    if (p >= span.cols()) comp.push_back(p - span.cols());
  return comp;
}

}  // namespace

ExactMatrix induced_quotient_map(const ExactMatrix& f,
                                 const ExactMatrix& sub_source,
                                 const ExactMatrix& sub_target) {
  if (sub_source.rows() != f.cols() || sub_target.rows() != f.rows())
    throw std::invalid_argument("induced_quotient_map: shape mismatch");

  LinearSolver tgt_sub(sub_target);
  for (long c = 0; c < sub_source.cols(); ++c) {
    if (!tgt_sub.solve(f.apply(sub_source.column(c))))
      throw MathConsistencyError(
          "induced_quotient_map: f does not map sub_source into sub_target");
  }

  const std::vector<long> src_comp = lex_complement(sub_source);
  const std::vector<long> tgt_comp = lex_complement(sub_target);

  // Coordinates on target/sub_target: solve [sub_target | comp] x = v and
  // keep the complement part.
  ExactMatrix tgt_full = ExactMatrix::hcat(
      sub_target, ExactMatrix::identity(f.rows()).select_columns(tgt_comp));
  LinearSolver tgt(tgt_full);

  ExactMatrix out(static_cast<long>(tgt_comp.size()),
                  static_cast<long>(src_comp.size()));
  for (size_t j = 0; j < src_comp.size(); ++j) {
    Vec e(f.cols());
    e[src_comp[j]] = 1;
    auto x = tgt.solve(f.apply(e));
    if (!x) throw MathConsistencyError("induced_quotient_map: target coordinates failed");
    for (size_t i = 0; i < tgt_comp.size(); ++i)
      out.at(static_cast<long>(i), static_cast<long>(j)) = (*x)[sub_target.cols() + i];
  }
  return out;
}

}  // namespace qsp
