#include "qspencer/algebra.hpp"

namespace qsp {

namespace {

ExactMatrix unit(int size, int r, int c) {  // 1-based matrix unit e_{rc}
  ExactMatrix m(size, size);
  m.at(r - 1, c - 1) = 1;
  return m;
}

}  // namespace

GradedAlgebra::GradedAlgebra(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("GradedAlgebra: n must be >= 2");
  build_basis();
  build_tables();
}

long GradedAlgebra::dim(int degree) const {
  switch (degree) {
    case -1: return 4L * n_;
    case 0: return 4L * n_ * n_ + 3;
    case 1: return 4L * n_;
    default: return 0;
  }
}

void GradedAlgebra::build_basis() {
  const int N = matrix_size();

  // degree -1: EH block, S^2H triple, rho.
  for (int j = 3; j <= 2 * n_; ++j)
    for (int i = 1; i <= 2; ++i) basis_v_.push_back(unit(N, j, i));
  {
    ExactMatrix s1(N, N), s2(N, N), s3(N, N), rho(N, N);
    s1.at(2 * n_, 0) = 1; s1.at(2 * n_ + 1, 1) = -1;
    s2.at(2 * n_, 1) = 1;
    s3.at(2 * n_ + 1, 0) = 1;
    rho.at(2 * n_, 0) = 1; rho.at(2 * n_ + 1, 1) = 1;
    basis_v_.push_back(s1);
    basis_v_.push_back(s2);
    basis_v_.push_back(s3);
    basis_v_.push_back(rho);
  }

  // degree 0: off-diagonal units of the two diagonal blocks, then coroots.
  basis_0_.push_back(unit(N, 1, 2));
  basis_0_.push_back(unit(N, 2, 1));
  for (int a = 3; a <= N; ++a)
    for (int b = 3; b <= N; ++b)
      if (a != b) basis_0_.push_back(unit(N, a, b));
  for (int i = 1; i <= l(); ++i) {
    ExactMatrix h(N, N);
    h.at(i - 1, i - 1) = 1;
    h.at(i, i) = -1;
    basis_0_.push_back(h);
  }

  // degree +1: upper-right block.
  for (int i = 1; i <= 2; ++i)
    for (int b = 3; b <= N; ++b) basis_1_.push_back(unit(N, i, b));

  if (static_cast<long>(basis_v_.size()) != dim(-1) ||
      static_cast<long>(basis_0_.size()) != dim(0) ||
      static_cast<long>(basis_1_.size()) != dim(1))
    throw MathConsistencyError("GradedAlgebra: basis dimensions off");

  // Levi generators and the s torus.
  const int L = l();
  {
    ExactMatrix h(N, N);
    h.at(0, 0) = 1; h.at(1, 1) = -1;
    h.at(L - 1, L - 1) = 1; h.at(L, L) = -1;
    ExactMatrix e(N, N), f(N, N);
    e.at(0, 1) = 1; e.at(L - 1, L) = 1;
    f.at(1, 0) = 1; f.at(L, L - 1) = 1;
    levi_.e = e; levi_.f = f; levi_.h = h;
    torus_.push_back(h);
  }
  for (int i = 3; i <= L - 2; ++i) {
    levi_.slm.push_back(unit(N, i, i + 1));
    levi_.slm.push_back(unit(N, i + 1, i));
    ExactMatrix h(N, N);
    h.at(i - 1, i - 1) = 1;
    h.at(i, i) = -1;
    levi_.slm.push_back(h);
    torus_.push_back(h);
  }
  levi_.all.push_back(levi_.e);
  levi_.all.push_back(levi_.f);
  levi_.all.push_back(levi_.h);
  for (const auto& x : levi_.slm) levi_.all.push_back(x);

  for (const auto& x : basis_v_) wt_v_.push_back(compute_weight(x));
  for (const auto& x : basis_0_) wt_0_.push_back(compute_weight(x));
  for (const auto& x : basis_1_) wt_1_.push_back(compute_weight(x));
}

SWeight GradedAlgebra::compute_weight(const ExactMatrix& x) const {
  SWeight w;
  w.dyn.assign(torus_.size() - 1, 0);
  bool first = true;
  for (size_t t = 0; t < torus_.size(); ++t) {
    ExactMatrix ad = bracket(torus_[t], x);
    // x must be an eigenvector of every torus element.
    Rational lam;
    bool found = false;
    for (long r = 0; r < x.rows() && !found; ++r)
      for (long c = 0; c < x.cols() && !found; ++c)
        if (!x.at(r, c).is_zero()) {
          lam = ad.at(r, c) / x.at(r, c);
          found = true;
        }
    if (!found) throw MathConsistencyError("compute_weight: zero basis element");
    for (long r = 0; r < x.rows(); ++r)
      for (long c = 0; c < x.cols(); ++c)
        if (ad.at(r, c) != lam * x.at(r, c))
          throw MathConsistencyError("compute_weight: not a torus eigenvector");
    if (lam.denominator() != 1)
      throw MathConsistencyError("compute_weight: non-integral weight");
    const long v = lam.numerator().get_si();
    if (t == 0) w.a = v; else w.dyn[t - 1] = v;
    (void)first;
  }
  return w;
}

const ExactMatrix& GradedAlgebra::basis_elem(int degree, long i) const {
  switch (degree) {
    case -1: return basis_v_.at(i);
    case 0: return basis_0_.at(i);
    case 1: return basis_1_.at(i);
    default: throw std::invalid_argument("basis_elem: bad degree");
  }
}

const SWeight& GradedAlgebra::weight(int degree, long i) const {
  switch (degree) {
    case -1: return wt_v_.at(i);
    case 0: return wt_0_.at(i);
    case 1: return wt_1_.at(i);
    default: throw std::invalid_argument("weight: bad degree");
  }
}

ExactMatrix GradedAlgebra::bracket(const ExactMatrix& x, const ExactMatrix& y) const {
  ExactMatrix xy = x.multiply(y);
  ExactMatrix yx = y.multiply(x);
  ExactMatrix out(x.rows(), x.cols());
  for (long r = 0; r < out.rows(); ++r)
    for (long c = 0; c < out.cols(); ++c) out.at(r, c) = xy.at(r, c) - yx.at(r, c);
  return out;
}

Vec GradedAlgebra::expand(int degree, const ExactMatrix& x) const {
  const int N = matrix_size();
  if (x.rows() != N || x.cols() != N)
    throw std::invalid_argument("expand: wrong matrix size");
  Vec c(dim(degree));

  if (degree == -1) {
    for (int j = 3; j <= 2 * n_; ++j)
      for (int i = 1; i <= 2; ++i)
        c[(j - 3) * 2 + (i - 1)] = x.at(j - 1, i - 1);
    const Rational x11 = x.at(2 * n_, 0), x12 = x.at(2 * n_, 1);
    const Rational x21 = x.at(2 * n_ + 1, 0), x22 = x.at(2 * n_ + 1, 1);
    c[u_dim()] = (x11 - x22) / Rational(2);
    c[u_dim() + 1] = x12;
    c[u_dim() + 2] = x21;
    c[rho_index()] = (x11 + x22) / Rational(2);
  } else if (degree == 0) {
    long k = 0;
    c[k++] = x.at(0, 1);
    c[k++] = x.at(1, 0);
    for (int a = 3; a <= N; ++a)
      for (int b = 3; b <= N; ++b)
        if (a != b) c[k++] = x.at(a - 1, b - 1);
    Rational acc;
    for (int i = 1; i <= l(); ++i) {
      acc += x.at(i - 1, i - 1);
      c[k++] = acc;
    }
  } else if (degree == 1) {
    long k = 0;
    for (int i = 1; i <= 2; ++i)
      for (int b = 3; b <= N; ++b) c[k++] = x.at(i - 1, b - 1);
  } else {
    throw std::invalid_argument("expand: bad degree");
  }

  // Reconstruct and compare; rejects anything outside the graded piece.
  ExactMatrix rec(N, N);
  const auto& basis = degree == -1 ? basis_v_ : degree == 0 ? basis_0_ : basis_1_;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (long r = 0; r < N; ++r)
      for (long cc = 0; cc < N; ++cc)
        if (!basis[i].at(r, cc).is_zero()) rec.at(r, cc) += c[i] * basis[i].at(r, cc);
  }
  if (!(rec == x))
    throw MathConsistencyError("expand: element not in the requested graded piece");
  return c;
}

void GradedAlgebra::build_tables() {
  tab_g0_v_.resize(dim(0) * dim_v());
  for (long i = 0; i < dim(0); ++i)
    for (long t = 0; t < dim_v(); ++t) {
      Vec c = expand(-1, bracket(basis_0_[i], basis_v_[t]));
      auto& slot = tab_g0_v_[i * dim_v() + t];
      for (long k = 0; k < static_cast<long>(c.size()); ++k)
        if (!c[k].is_zero()) slot.emplace_back(k, c[k]);
    }
  tab_g1_v_.resize(dim(1) * dim_v());
  for (long i = 0; i < dim(1); ++i)
    for (long t = 0; t < dim_v(); ++t) {
      Vec c = expand(0, bracket(basis_1_[i], basis_v_[t]));
      auto& slot = tab_g1_v_[i * dim_v() + t];
      for (long k = 0; k < static_cast<long>(c.size()); ++k)
        if (!c[k].is_zero()) slot.emplace_back(k, c[k]);
    }
}

const std::vector<std::pair<long, Rational>>& GradedAlgebra::bracket_g0_v(long i, long t) const {
  return tab_g0_v_.at(i * dim_v() + t);
}

const std::vector<std::pair<long, Rational>>& GradedAlgebra::bracket_g1_v(long i, long t) const {
  return tab_g1_v_.at(i * dim_v() + t);
}

GradedAlgebra::SubspaceTable GradedAlgebra::subspaces() const {
  SubspaceTable t;
  t.eh_dim = u_dim();
  for (long i = 0; i < u_dim(); ++i) t.u_indices.push_back(i);
  for (long i = u_dim(); i < u_dim() + 3; ++i) t.uperp_indices.push_back(i);
  for (long i = 0; i < w_dim(); ++i) t.w_indices.push_back(i);
  for (long i = 0; i < dim_v(); ++i) t.v_indices.push_back(i);
  t.wperp_index = rho_index();
  return t;
}

std::vector<Vec> GradedAlgebra::stabilizer_of_w() const {
  // X stabilizes W iff the rho coefficient of [X, w] vanishes for every
  // W basis vector w.
  ExactMatrix m(w_dim(), dim(0));
  for (long i = 0; i < dim(0); ++i)
    for (long t = 0; t < w_dim(); ++t)
      for (const auto& [k, v] : bracket_g0_v(i, t))
        if (k == rho_index()) m.at(t, i) = v;
  return kernel_basis(m);
}

}  // namespace qsp
