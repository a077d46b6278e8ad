#include "qspencer/quaternions.hpp"

namespace qsp {

bool GaussVec::is_zero() const {
  for (const Rational& x : re)
    if (!x.is_zero()) return false;
  for (const Rational& x : im)
    if (!x.is_zero()) return false;
  return true;
}

Quaternion RealForm::real_basis_unit(int unit) {
  switch (unit) {
    case 0: return {0, -1, 0, 0};  // I_1 1 = -i
    case 1: return {0, 0, -1, 0};  // I_2 1 = -j
    case 2: return {0, 0, 0, -1};  // I_3 1 = -k
    case 3: return Quaternion::one();
    default: throw std::invalid_argument("real_basis_unit: unit out of range");
  }
}

Quaternion RealForm::imh_basis(int alpha) {
  switch (alpha) {
    case 1: return Quaternion::ui();
    case 2: return Quaternion::uj();
    case 3: return Quaternion::uk();
    default: throw std::invalid_argument("imh_basis: alpha out of range");
  }
}

GaussVec RealForm::psi(int slot, const Quaternion& q) const {
  const int n = a_->n();
  if (slot < 0 || slot >= n) throw std::invalid_argument("psi: slot out of range");
  GaussVec v(a_->dim_v());
  // block entries z = q.r + q.i i, w = q.j + q.k i,
  // [[z, w], [-conj w, conj z]]
  if (slot < n - 1) {
    const long base = 4L * slot;  // e_{r,1}, e_{r,2}, e_{r+1,1}, e_{r+1,2}
    v.re[base + 0] = q.r;  v.im[base + 0] = q.i;
    v.re[base + 1] = q.j;  v.im[base + 1] = q.k;
    v.re[base + 2] = -q.j; v.im[base + 2] = q.k;
    v.re[base + 3] = q.r;  v.im[base + 3] = -q.i;
  } else {
    const long s1 = a_->u_dim(), s2 = s1 + 1, s3 = s1 + 2, rho = a_->rho_index();
    v.im[s1] = q.i;                       // (z - conj z)/2
    v.re[rho] = q.r;                      // (z + conj z)/2
    v.re[s2] = q.j;  v.im[s2] = q.k;      // w
    v.re[s3] = -q.j; v.im[s3] = q.k;      // -conj w
  }
  return v;
}

GaussVec RealForm::psi_basis(long real_index) const {
  return psi(static_cast<int>(real_index / 4),
             real_basis_unit(static_cast<int>(real_index % 4)));
}

GaussVec RealForm::psi_imh(int alpha) const {
  return psi(a_->n() - 1, imh_basis(alpha));
}

std::vector<std::pair<long, GaussianRational>> RealForm::psi_inverse(long v_index) const {
  const int n = a_->n();
  const Rational h(1, 2);
  long slot, pos;
  if (v_index < a_->u_dim()) {
    slot = v_index / 4;
    pos = v_index % 4;  // e_{r,1}, e_{r,2}, e_{r+1,1}, e_{r+1,2}
  } else {
    slot = n - 1;
    const long k = v_index - a_->u_dim();
    if (k == 0) {  // s1 = i u0
      return {{4 * slot + 0, {0, 1}}};
    } else if (k == 1) {
      pos = 1;  // s2 = e_{2n+1,2}
    } else if (k == 2) {
      pos = 2;  // s3 = e_{2n+2,1}
    } else {    // rho = u3
      return {{4 * slot + 3, {1, 0}}};
    }
  }
  const long u0 = 4 * slot, u1 = u0 + 1, u2 = u0 + 2, u3 = u0 + 3;
  switch (pos) {
    case 0: return {{u3, {h, 0}}, {u0, {0, h}}};   // e_{r,1} = (u3 + i u0)/2
    case 1: return {{u1, {-h, 0}}, {u2, {0, h}}};  // e_{r,2} = (-u1 + i u2)/2
    case 2: return {{u1, {h, 0}}, {u2, {0, h}}};   // e_{r+1,1} = (u1 + i u2)/2
    case 3: return {{u3, {h, 0}}, {u0, {0, -h}}};  // e_{r+1,2} = (u3 - i u0)/2
    default: throw std::logic_error("psi_inverse");
  }
}

ExactMatrix RealForm::pull_back_endo(const std::vector<GaussVec>& images) const {
  const long d = real_dim();
  if (static_cast<long>(images.size()) != d)
    throw std::invalid_argument("pull_back_endo: need one image per real basis vector");
  ExactMatrix m(d, d);
  for (long col = 0; col < d; ++col) {
    Vec out_re(d), out_im(d);
    for (long v = 0; v < a_->dim_v(); ++v) {
      const GaussianRational coef{images[col].re[v], images[col].im[v]};
      if (coef.is_zero()) continue;
      for (const auto& [ri, g] : psi_inverse(v)) {
        const GaussianRational prod = coef * g;
        out_re[ri] += prod.re;
        out_im[ri] += prod.im;
      }
    }
    for (long r = 0; r < d; ++r) {
      if (!out_im[r].is_zero())
        throw MathConsistencyError("pull_back_endo: endomorphism is not real");
      m.at(r, col) = out_re[r];
    }
  }
  return m;
}

namespace {

struct CMat {
  ExactMatrix re, im;
  CMat(long r, long c) : re(r, c), im(r, c) {}
};

CMat cmul(const CMat& a, const CMat& b) {
  CMat out(a.re.rows(), b.re.cols());
  ExactMatrix rr = a.re.multiply(b.re), ii = a.im.multiply(b.im);
  ExactMatrix ri = a.re.multiply(b.im), ir = a.im.multiply(b.re);
  for (long r = 0; r < out.re.rows(); ++r)
    for (long c = 0; c < out.re.cols(); ++c) {
      out.re.at(r, c) = rr.at(r, c) - ii.at(r, c);
      out.im.at(r, c) = ri.at(r, c) + ir.at(r, c);
    }
  return out;
}

CMat csub(const CMat& a, const CMat& b) {
  CMat out(a.re.rows(), a.re.cols());
  for (long r = 0; r < out.re.rows(); ++r)
    for (long c = 0; c < out.re.cols(); ++c) {
      out.re.at(r, c) = a.re.at(r, c) - b.re.at(r, c);
      out.im.at(r, c) = a.im.at(r, c) - b.im.at(r, c);
    }
  return out;
}

CMat cbracket(const CMat& a, const CMat& b) { return csub(cmul(a, b), cmul(b, a)); }

}  // namespace

ExactMatrix RealForm::dual_action_bracket(int slot_a, const Quaternion& p,
                                          int slot_b, const Quaternion& h) const {
  const int N = a_->matrix_size();
  const int n = a_->n();
  if (slot_a < 0 || slot_a >= n || slot_b < 0 || slot_b >= n)
    throw std::invalid_argument("dual_action_bracket: slot out of range");

  // X = psi1(p at slot_a): block [[z, w], [-conj w, conj z]] at rows (1,2),
  // cols (2 slot_a + 3, 2 slot_a + 4).
  CMat x(N, N);
  {
    const long c0 = 2L * slot_a + 2;  // 0-based column
    x.re.at(0, c0) = p.r;      x.im.at(0, c0) = p.i;
    x.re.at(0, c0 + 1) = p.j;  x.im.at(0, c0 + 1) = p.k;
    x.re.at(1, c0) = -p.j;     x.im.at(1, c0) = p.k;
    x.re.at(1, c0 + 1) = p.r;  x.im.at(1, c0 + 1) = -p.i;
  }
  auto v_matrix = [&](const GaussVec& g) {
    CMat m(N, N);
    for (long v = 0; v < a_->dim_v(); ++v) {
      const ExactMatrix& bv = a_->basis_elem(-1, v);
      if (g.re[v].is_zero() && g.im[v].is_zero()) continue;
      for (long r = 0; r < N; ++r)
        for (long c = 0; c < N; ++c)
          if (!bv.at(r, c).is_zero()) {
            m.re.at(r, c) += g.re[v] * bv.at(r, c);
            m.im.at(r, c) += g.im[v] * bv.at(r, c);
          }
    }
    return m;
  };

  CMat y = v_matrix(psi(slot_b, h));
  CMat k = cbracket(x, y);

  std::vector<GaussVec> images;
  for (long ri = 0; ri < real_dim(); ++ri) {
    CMat z = v_matrix(psi_basis(ri));
    CMat kz = cbracket(k, z);
    GaussVec img(a_->dim_v());
    img.re = a_->expand(-1, kz.re);
    img.im = a_->expand(-1, kz.im);
    images.push_back(std::move(img));
  }
  return pull_back_endo(images);
}

ExactMatrix RealForm::dual_action_formula(int slot_a, const Quaternion& p,
                                          int slot_b, const Quaternion& h) const {
  const int n = a_->n();
  const long d = real_dim();

  // real matrices of I_alpha = -R_{i,j,k}
  auto right_mult_matrix = [&](const Quaternion& q) {
    ExactMatrix m(d, d);
    for (long col = 0; col < d; ++col) {
      const Quaternion img =
          real_basis_unit(static_cast<int>(col % 4)) * q.scale(-1);
      const long base = 4 * (col / 4);
      // expansion over (-i, -j, -k, 1)
      m.at(base + 0, col) = -img.i;
      m.at(base + 1, col) = -img.j;
      m.at(base + 2, col) = -img.k;
      m.at(base + 3, col) = img.r;
    }
    return m;
  };
  const ExactMatrix i1 = right_mult_matrix(Quaternion::ui());
  const ExactMatrix i2 = right_mult_matrix(Quaternion::uj());
  const ExactMatrix i3 = right_mult_matrix(Quaternion::uk());

  // v* row: x -> -Re(p x_{slot_a});  v column: h in slot_b
  Vec vstar(d), vcol(d);
  for (int u = 0; u < 4; ++u) {
    const Quaternion q = real_basis_unit(u);
    vstar[4 * slot_a + u] = -(p * q).r;
    // expansion of h over the slot_b units
  }
  vcol[4 * slot_b + 0] = -h.i;
  vcol[4 * slot_b + 1] = -h.j;
  vcol[4 * slot_b + 2] = -h.k;
  vcol[4 * slot_b + 3] = h.r;

  auto pair_with = [&](const Vec& row, const Vec& col) {
    Rational acc;
    for (long i = 0; i < d; ++i) acc += row[i] * col[i];
    return acc;
  };
  auto outer = [&](const Vec& col, const Vec& row) {
    ExactMatrix m(d, d);
    for (long r = 0; r < d; ++r)
      for (long c = 0; c < d; ++c)
        if (!col[r].is_zero() && !row[c].is_zero()) m.at(r, c) = col[r] * row[c];
    return m;
  };
  auto row_compose = [&](const Vec& row, const ExactMatrix& m) {
    Vec out(d);
    for (long c = 0; c < d; ++c) {
      Rational acc;
      for (long r = 0; r < d; ++r)
        if (!row[r].is_zero()) acc += row[r] * m.at(r, c);
      out[c] = acc;
    }
    return out;
  };

  ExactMatrix f(d, d);
  const Rational vv = pair_with(vstar, vcol);
  for (long i = 0; i < d; ++i) f.at(i, i) = vv;
  ExactMatrix vvs = outer(vcol, vstar);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) f.at(r, c) += vvs.at(r, c);

  for (const ExactMatrix* ia : {&i1, &i2, &i3}) {
    const Vec ia_v = ia->apply(vcol);
    const Rational s = pair_with(vstar, ia_v);
    const Vec vstar_ia = row_compose(vstar, *ia);
    ExactMatrix term = outer(ia_v, vstar_ia);
    for (long r = 0; r < d; ++r)
      for (long c = 0; c < d; ++c) {
        f.at(r, c) -= s * ia->at(r, c);
        f.at(r, c) -= term.at(r, c);
      }
  }
  (void)n;
  return f;
}

}  // namespace qsp
