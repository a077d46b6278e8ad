#include "qspencer/brackets.hpp"

#include <json.hpp>

#include "qspencer/characters.hpp"

namespace qsp {

BracketSpec::BracketSpec(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("BracketSpec: n must be >= 2");
}

void BracketSpec::check(int i, int j, int alpha) const {
  if (i < 1 || j < 1 || i > u_dim() || j > u_dim() || i == j)
    throw std::invalid_argument("BracketSpec: index out of range");
  if (alpha < 1 || alpha > 3)
    throw std::invalid_argument("BracketSpec: alpha out of range");
}

void BracketSpec::set(int i, int j, int alpha, const Rational& v) {
  check(i, j, alpha);
  const Rational val = i < j ? v : -v;
  const auto key = std::make_tuple(std::min(i, j), std::max(i, j), alpha);
  if (val.is_zero())
    e_.erase(key);
  else
    e_[key] = val;
}

Rational BracketSpec::get(int i, int j, int alpha) const {
  check(i, j, alpha);
  const auto key = std::make_tuple(std::min(i, j), std::max(i, j), alpha);
  auto it = e_.find(key);
  if (it == e_.end()) return Rational(0);
  return i < j ? it->second : -it->second;
}

BracketSpec standard_contact_bracket(int n) {
  BracketSpec b(n);
  for (int s = 0; s < n - 1; ++s)
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        const Quaternion prod = RealForm::real_basis_unit(p).conj() *
                                RealForm::real_basis_unit(q);
        const Rational im[3] = {prod.i, prod.j, prod.k};
        for (int alpha = 1; alpha <= 3; ++alpha)
          if (!im[alpha - 1].is_zero())
            b.set(4 * s + p + 1, 4 * s + q + 1, alpha, im[alpha - 1]);
      }
  return b;
}

BracketSpec deformation_family(const BracketSpec& l0, const BracketSpec& l,
                               const Rational& t) {
  if (l0.n() != l.n())
    throw std::invalid_argument("deformation_family: mismatched n");
  BracketSpec out = l0;
  for (const auto& [key, v] : l.entries()) {
    const auto [i, j, alpha] = key;
    out.set(i, j, alpha, out.get(i, j, alpha) + t * v);
  }
  return out;
}

BracketSpec bracket_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bracket file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("bracket file: missing integer field 'n'");
  const int n = doc["n"].get<int>();
  if (n < 2) throw ParseError("bracket file: n must be >= 2");
  BracketSpec b(n);
  if (!doc.contains("entries")) return b;
  if (!doc["entries"].is_array())
    throw ParseError("bracket file: 'entries' must be an array");
  long count = 0;
  for (const auto& e : doc["entries"]) {
    ++count;
    const std::string where = "bracket file: entry #" + std::to_string(count);
    if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
        !e.contains("alpha") || !e.contains("value"))
      throw ParseError(where + ": need fields i, j, alpha, value");
    if (!e["i"].is_number_integer() || !e["j"].is_number_integer() ||
        !e["alpha"].is_number_integer() || !e["value"].is_string())
      throw ParseError(where + ": bad field types");
    const int i = e["i"].get<int>(), j = e["j"].get<int>(), alpha = e["alpha"].get<int>();
    if (i >= j)
      throw ParseError(where + ": need i < j");
    if (j > 4 * (n - 1) || i < 1 || alpha < 1 || alpha > 3)
      throw ParseError(where + ": index out of range");
    if (!b.get(i, j, alpha).is_zero())
      throw ParseError(where + ": duplicate key (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(alpha) + ")");
    Rational v(0);
    try {
      v = Rational(e["value"].get<std::string>());
    } catch (const ParseError&) {
      throw ParseError(where + ": bad rational '" + e["value"].get<std::string>() + "'");
    }
    if (v.is_zero())
      throw ParseError(where + ": explicit zero entries are not allowed");
    b.set(i, j, alpha, v);
  }
  return b;
}

std::string bracket_to_json(const BracketSpec& b) {
  nlohmann::ordered_json doc;
  doc["n"] = b.n();
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, v] : b.entries()) {
    const auto [i, j, alpha] = key;
    doc["entries"].push_back({{"i", i}, {"j", j}, {"alpha", alpha}, {"value", v.str()}});
  }
  return doc.dump(2);
}

long bracket_coord_dim(int n) {
  const long u = 4L * (n - 1);
  return 3 * u * (u - 1) / 2;
}

namespace {

long pair_index(long i, long j, long u) {  // 1-based i < j, lexicographic
  return (i - 1) * u - (i - 1) * i / 2 + (j - i - 1);
}

}  // namespace

Vec bracket_coords(const BracketSpec& b) {
  const long u = b.u_dim();
  Vec v(bracket_coord_dim(b.n()));
  for (const auto& [key, val] : b.entries()) {
    const auto [i, j, alpha] = key;
    v[(alpha - 1) * (u * (u - 1) / 2) + pair_index(i, j, u)] = val;
  }
  return v;
}

BracketSpec bracket_from_coords(int n, const Vec& v) {
  if (static_cast<long>(v.size()) != bracket_coord_dim(n))
    throw std::invalid_argument("bracket_from_coords: size mismatch");
  BracketSpec b(n);
  const long u = 4L * (n - 1);
  long idx = 0;
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int i = 1; i <= u; ++i)
      for (int j = i + 1; j <= u; ++j) {
        if (!v[idx].is_zero()) b.set(i, j, alpha, v[idx]);
        ++idx;
      }
  return b;
}

namespace {

// Action of a g^0 element restricted to the coordinate subspace
// Uperp (x) L^2 U* inside C^{0,2}(g~,W); throws if the subspace leaks.
ExactMatrix restrict_to_x(const Slice& s, const std::vector<long>& x_idx,
                          const std::vector<long>& x_pos_of_slice,
                          const SparseCols& cols) {
  const long k = static_cast<long>(x_idx.size());
  ExactMatrix m(k, k);
  for (long c = 0; c < k; ++c)
    for (const auto& [row, v] : cols[x_idx[c]]) {
      const long rp = x_pos_of_slice[row];
      if (rp < 0)
        throw MathConsistencyError("R1Engine: isotypic subspace is not invariant");
      m.at(rp, c) = v;
    }
  (void)s;
  return m;
}

}  // namespace

R1Engine::R1Engine(SpencerContext& ctx) : ctx_(&ctx), n_(ctx.algebra().n()) {
  const GradedAlgebra& a = ctx.algebra();
  c02_ = &ctx.slice(0, 2, Flavor::relative);
  c11_ = &ctx.slice(1, 1, Flavor::relative);

  // the embedded coordinate subspace: S^2H-valued cochains on U pairs
  const uint32_t u_mask = (1u << a.u_dim()) - 1u;
  std::vector<long> x_pos(c02_->dim(), -1);
  for (long i = 0; i < c02_->dim(); ++i) {
    const SliceElem& el = c02_->elements()[i];
    if (el.coeff >= a.u_dim() && el.coeff < a.u_dim() + 3 &&
        (el.mask & ~u_mask) == 0) {
      x_pos[i] = static_cast<long>(x_idx_.size());
      x_idx_.push_back(i);
    }
  }
  const long k = static_cast<long>(x_idx_.size());
  if (k != bracket_coord_dim(n_))
    throw MathConsistencyError("R1Engine: embedded subspace has wrong dimension");

  // T: bracket coordinates -> x coordinates (complex).  For the basis
  // bracket with c^alpha_{bi,bj} = 1 the embedded cochain is
  //   c(w_a, w_b) = (A[a][bi] A[b][bj] - A[a][bj] A[b][bi]) psi(z_alpha)
  // where A[w][p] is the coefficient of the real basis vector u_p in
  // psi^{-1}(w_w).
  RealForm rf(a);
  const long u = a.u_dim();
  std::vector<std::vector<GaussianRational>> A(
      u, std::vector<GaussianRational>(u, GaussianRational{0, 0}));
  for (long w = 0; w < u; ++w)
    for (const auto& [p, g] : rf.psi_inverse(w)) A[w][p] = g;
  std::vector<GaussVec> psi_z;
  for (int alpha = 1; alpha <= 3; ++alpha) psi_z.push_back(rf.psi_imh(alpha));

  t_re_ = ExactMatrix(k, k);
  t_im_ = ExactMatrix(k, k);
  const long npairs = u * (u - 1) / 2;
  for (long xp = 0; xp < k; ++xp) {
    const SliceElem& el = c02_->elements()[x_idx_[xp]];
    const long zi = el.coeff;  // V index of the value direction s1..s3
    int wa = -1, wb = -1;
    for (int t = 0; t < static_cast<int>(u); ++t)
      if (el.mask & (1u << t)) {
        if (wa < 0) wa = t; else wb = t;
      }
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const GaussianRational z{psi_z[alpha - 1].re[zi], psi_z[alpha - 1].im[zi]};
      if (z.is_zero()) continue;
      for (int bi = 1; bi <= u; ++bi)
        for (int bj = bi + 1; bj <= u; ++bj) {
          GaussianRational pair =
              A[wa][bi - 1] * A[wb][bj - 1] +
              GaussianRational{-1, 0} * (A[wa][bj - 1] * A[wb][bi - 1]);
          if (pair.is_zero()) continue;
          const GaussianRational val = pair * z;
          const long col = (alpha - 1) * npairs + pair_index(bi, bj, u);
          t_re_.at(xp, col) = val.re;
          t_im_.at(xp, col) = val.im;
        }
    }
  }

  // doubled real system for T^{-1}
  ExactMatrix doubled(2 * k, 2 * k);
  for (long r = 0; r < k; ++r)
    for (long c = 0; c < k; ++c) {
      doubled.at(r, c) = t_re_.at(r, c);
      doubled.at(r, k + c) = -t_im_.at(r, c);
      doubled.at(k + r, c) = t_im_.at(r, c);
      doubled.at(k + r, k + c) = t_re_.at(r, c);
    }
  t_solver_ = std::make_unique<LinearSolver>(doubled);
  if (t_solver_->rank() != 2 * k)
    throw MathConsistencyError("R1Engine: embedding is not injective");

  // Casimir operators on the x subspace
  auto on_x = [&](const ExactMatrix& g) {
    return restrict_to_x(*c02_, x_idx_, x_pos, action_columns(*c02_, g));
  };
  const auto& levi = a.levi();
  ExactMatrix e = on_x(levi.e), f = on_x(levi.f), h = on_x(levi.h);
  ExactMatrix c2 = e.multiply(f);
  {
    ExactMatrix fe = f.multiply(e), hh = h.multiply(h);
    for (long r = 0; r < c2.rows(); ++r)
      for (long c = 0; c < c2.cols(); ++c)
        c2.at(r, c) += fe.at(r, c) + Rational(1, 2) * hh.at(r, c);
  }

  const int m = a.m();
  ExactMatrix cm(k, k);
  {
    const int N = a.matrix_size();
    // off-diagonal units of the sl(m) block: rows/cols 3..2n
    for (int aa = 3; aa <= 2 * n_; ++aa)
      for (int bb = 3; bb <= 2 * n_; ++bb) {
        if (aa == bb) continue;
        ExactMatrix eab(N, N), eba(N, N);
        eab.at(aa - 1, bb - 1) = 1;
        eba.at(bb - 1, aa - 1) = 1;
        ExactMatrix prod = on_x(eab).multiply(on_x(eba));
        for (long r = 0; r < k; ++r)
          for (long c = 0; c < k; ++c) cm.at(r, c) += prod.at(r, c);
      }
    // Cartan part: coroots H_i with Gram matrix tr(H_i H_j)
    std::vector<ExactMatrix> hx;
    ExactMatrix gram(m - 1, m - 1);
    for (int i = 0; i < m - 1; ++i) {
      ExactMatrix hi(N, N);
      hi.at(2 + i, 2 + i) = 1;
      hi.at(3 + i, 3 + i) = -1;
      hx.push_back(on_x(hi));
      gram.at(i, i) = 2;
      if (i > 0) {
        gram.at(i, i - 1) = -1;
        gram.at(i - 1, i) = -1;
      }
    }
    LinearSolver gs(gram);
    for (int i = 0; i < m - 1; ++i) {
      Vec ei(m - 1);
      ei[i] = 1;
      Vec gi = *gs.solve(ei);  // column i of gram^{-1}
      for (int j = 0; j < m - 1; ++j) {
        if (gi[j].is_zero()) continue;
        ExactMatrix prod = hx[j].multiply(hx[i]);
        for (long r = 0; r < k; ++r)
          for (long c = 0; c < k; ++c) cm.at(r, c) += gi[j] * prod.at(r, c);
      }
    }
  }

  // spectral projectors; eigenvalues a(a+2)/2 on S^aH and (l, l+2rho) on slm
  auto poly_proj = [&](const ExactMatrix& op, const std::vector<Rational>& all,
                       const Rational& mine) {
    ExactMatrix p = ExactMatrix::identity(k);
    for (const Rational& ev : all) {
      if (ev == mine) continue;
      ExactMatrix shifted = op;
      for (long r = 0; r < k; ++r) shifted.at(r, r) -= ev;
      p = shifted.multiply(p);
      const Rational scale = Rational(1) / (mine - ev);
      for (long r = 0; r < k; ++r)
        for (long c = 0; c < k; ++c) p.at(r, c) *= scale;
    }
    return p;
  };
  const std::vector<Rational> c2_vals = {Rational(0), Rational(4), Rational(12)};
  std::vector<long> dyn_l2(m - 1, 0), dyn_s2(m - 1, 0);
  if (m >= 3) dyn_l2[m - 3] = 1;  // omega_{m-2}; trivial for m = 2
  dyn_s2[m - 2] = 2;              // 2 omega_{m-1}
  const Rational v_l2 = casimir_slm_eigenvalue(m, dyn_l2);
  const Rational v_s2 = casimir_slm_eigenvalue(m, dyn_s2);
  const std::vector<Rational> cm_vals = {v_l2, v_s2};

  ExactMatrix p0 = poly_proj(c2, c2_vals, 0);
  ExactMatrix p2 = poly_proj(c2, c2_vals, 4);
  ExactMatrix p4 = poly_proj(c2, c2_vals, 12);
  ExactMatrix ql = poly_proj(cm, cm_vals, v_l2);
  ExactMatrix qs = poly_proj(cm, cm_vals, v_s2);

  // resolutions of the identity and purity of the a = 0, 4 blocks
  {
    ExactMatrix sum = p0;
    for (long r = 0; r < k; ++r)
      for (long c = 0; c < k; ++c) sum.at(r, c) += p2.at(r, c) + p4.at(r, c);
    if (!(sum == ExactMatrix::identity(k)))
      throw MathConsistencyError("R1Engine: sl(2) projectors do not resolve the identity");
    if (!(ql.multiply(p0) == p0) || !(ql.multiply(p4) == p4))
      throw MathConsistencyError(
          "R1Engine: isotypic structure of Uperp (x) L^2 U* is not the expected one");
  }

  proj_[0] = pull_back(p0);
  proj_[1] = pull_back(ql.multiply(p2));
  proj_[2] = pull_back(qs.multiply(p2));
  proj_[3] = pull_back(p4);

  // boundary blocks of d: C^{1,1} -> C^{0,2} for the weights meeting x
  BlockedMap din = blocked_differential(*c11_, *c02_);
  for (long xp = 0; xp < k; ++xp) {
    const SWeight& w = c02_->elements()[x_idx_[xp]].wt;
    if (boundary_solvers_.count(w)) continue;
    auto it = din.blocks.find(w);
    ExactMatrix blk = it == din.blocks.end()
                          ? ExactMatrix(static_cast<long>(c02_->blocks().at(w).size()), 0)
                          : it->second;
    boundary_solvers_.emplace(w, std::make_unique<LinearSolver>(blk));
    boundary_blocks_.emplace(w, std::move(blk));
  }
}

ExactMatrix R1Engine::pull_back(const ExactMatrix& op_on_x) const {
  const long k = static_cast<long>(x_idx_.size());
  ExactMatrix out(k, k);
  for (long j = 0; j < k; ++j) {
    Vec yre = op_on_x.apply(t_re_.column(j));
    Vec yim = op_on_x.apply(t_im_.column(j));
    Vec rhs(2 * k);
    for (long r = 0; r < k; ++r) {
      rhs[r] = yre[r];
      rhs[k + r] = yim[r];
    }
    auto x = t_solver_->solve(rhs);
    if (!x) throw MathConsistencyError("R1Engine: pull back failed");
    for (long r = 0; r < k; ++r) {
      if (!(*x)[k + r].is_zero())
        throw MathConsistencyError("R1Engine: pulled-back operator is not real");
      out.at(r, j) = (*x)[r];
    }
  }
  return out;
}

Vec R1Engine::to_x(const BracketSpec& b) const {
  if (b.n() != n_) throw std::invalid_argument("R1Engine: bracket has wrong n");
  return bracket_coords(b);
}

GaussVec R1Engine::embed(const BracketSpec& b) const {
  const Vec v = to_x(b);
  GaussVec out(c02_->dim());
  const Vec re = t_re_.apply(v), im = t_im_.apply(v);
  for (size_t xp = 0; xp < x_idx_.size(); ++xp) {
    out.re[x_idx_[xp]] = re[xp];
    out.im[x_idx_[xp]] = im[xp];
  }
  return out;
}

const ExactMatrix& R1Engine::bracket_projector(IsotypicBlock which) const {
  return proj_[static_cast<int>(which)];
}

std::vector<SWeight> R1Engine::embedded_weights() const {
  std::vector<SWeight> out;
  for (const auto& [w, blk] : boundary_blocks_) out.push_back(w);
  return out;
}

ObstructionReport R1Engine::r1_class(const BracketSpec& b) const {
  ObstructionReport rep;
  const Vec v = to_x(b);

  auto nonzero = [&](const ExactMatrix& p) {
    for (const Rational& x : p.apply(v))
      if (!x.is_zero()) return true;
    return false;
  };
  rep.nonzero_l2e = nonzero(proj_[0]);
  rep.nonzero_l2e_s2h = nonzero(proj_[1]);
  rep.nonzero_s2e_s2h = nonzero(proj_[2]);
  rep.nonzero_l2e_s4h = nonzero(proj_[3]);

  // membership of the embedded cochain in B^{0,2}(g~,W), weight block by
  // weight block, real and imaginary parts separately
  const GaussVec cochain = embed(b);
  GaussVec cert(c11_->dim());
  bool member = true;
  for (const auto& [w, solver] : boundary_solvers_) {
    const auto& rows = c02_->blocks().at(w);
    Vec bre(rows.size()), bim(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
      bre[r] = cochain.re[rows[r]];
      bim[r] = cochain.im[rows[r]];
    }
    auto xre = solver->solve(bre);
    auto xim = solver->solve(bim);
    if (!xre || !xim) {
      member = false;
      break;
    }
    auto ci = c11_->blocks().find(w);
    if (ci != c11_->blocks().end()) {
      for (size_t cidx = 0; cidx < ci->second.size(); ++cidx) {
        cert.re[ci->second[cidx]] = (*xre)[cidx];
        cert.im[ci->second[cidx]] = (*xim)[cidx];
      }
    }
  }
  rep.vanishes = member;
  if (member) rep.certificate = std::move(cert);
  return rep;
}

}  // namespace qsp
