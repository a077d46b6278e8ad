#include "qspencer/slices.hpp"

#include <bit>

#include "qspencer/threads.hpp"

namespace qsp {

namespace {

uint64_t key_of(long coeff, uint32_t mask) {
  return (static_cast<uint64_t>(coeff) << 32) | mask;
}

std::vector<int> mask_bits(uint32_t mask) {
  std::vector<int> out;
  for (int t = 0; mask; ++t, mask >>= 1)
    if (mask & 1u) out.push_back(t);
  return out;
}

}  // namespace

int sort_sign(std::vector<int> tuple) {
  int sign = 1;
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] > tuple[j]) sign = -sign;
  return sign;
}

Slice::Slice(const GradedAlgebra& a, int p, int q, Flavor f)
    : a_(&a), p_(p), q_(q), flavor_(f) {
  if (base_dim() > 31)
    throw std::invalid_argument("Slice: base space too large for subset masks");
  if (p < 0 || p > 2 || q < 0 || q > base_dim()) return;  // zero space

  const long nc = coeff_dim();
  const long nb = base_dim();

  // All q-subsets in lexicographic order of the sorted index tuple.
  std::vector<uint32_t> subsets;
  std::vector<int> idx(q);
  for (int i = 0; i < q; ++i) idx[i] = i;
  while (true) {
    uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    subsets.push_back(m);
    if (q == 0) break;
    int i = q - 1;
    while (i >= 0 && idx[i] == nb - q + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < q; ++k) idx[k] = idx[k - 1] + 1;
  }

  for (long c = 0; c < nc; ++c)
    for (uint32_t m : subsets) {
      SWeight w = a.weight(p_ - 1, c);
      for (int t : mask_bits(m)) w = w - a.weight(-1, t);
      elems_.push_back(SliceElem{c, m, std::move(w)});
    }
  for (long i = 0; i < dim(); ++i) {
    blocks_[elems_[i].wt].push_back(i);
    lookup_.emplace(key_of(elems_[i].coeff, elems_[i].mask), i);
  }
}

long Slice::base_dim() const {
  return flavor_ == Flavor::relative ? a_->w_dim() : a_->dim_v();
}

long Slice::coeff_dim() const {
  return (p_ < 0 || p_ > 2) ? 0 : a_->dim(p_ - 1);
}

long Slice::index_of(long coeff, uint32_t mask) const {
  auto it = lookup_.find(key_of(coeff, mask));
  return it == lookup_.end() ? -1 : it->second;
}

Character Slice::character() const {
  Character c;
  for (const auto& [w, idx] : blocks_) c[w] = static_cast<long>(idx.size());
  return c;
}

SparseCols differential_columns(const Slice& src, const Slice& tgt) {
  const GradedAlgebra& a = src.algebra();
  if (tgt.p() != src.p() - 1 || tgt.q() != src.q() + 1 || tgt.flavor() != src.flavor())
    throw std::invalid_argument("differential_columns: bidegree mismatch");

  SparseCols cols(src.dim());
  if (tgt.dim() == 0 || src.dim() == 0) return cols;
  const long nb = src.base_dim();

  parallel_for(src.dim(), [&](long j) {
    const SliceElem& el = src.elements()[j];
    std::map<long, Rational> acc;  // target index -> value
    for (int t = 0; t < nb; ++t) {
      if (el.mask & (1u << t)) continue;
      const uint32_t tmask = el.mask | (1u << t);
      // position of t in the sorted union, 1-based paper index
      const int pos = std::popcount(el.mask & ((1u << t) - 1u));
      const Rational sign = (pos % 2 == 0) ? Rational(-1) : Rational(1);
      const auto& exp = src.p() == 1 ? a.bracket_g0_v(el.coeff, t)
                                     : a.bracket_g1_v(el.coeff, t);
      for (const auto& [k, v] : exp) {
        const long row = tgt.index_of(k, tmask);
        if (row < 0) throw MathConsistencyError("differential: missing target element");
        acc[row] += sign * v;
      }
    }
    for (auto& [row, v] : acc)
      if (!v.is_zero()) cols[j].emplace_back(row, std::move(v));
  });
  return cols;
}

SparseCols action_columns(const Slice& s, const ExactMatrix& X) {
  const GradedAlgebra& a = s.algebra();
  SparseCols cols(s.dim());
  if (s.dim() == 0) return cols;

  // [X, coeff basis] expanded over the same degree.
  const int cd = s.p() - 1;
  std::vector<std::vector<std::pair<long, Rational>>> ad_coeff(s.coeff_dim());
  for (long i = 0; i < s.coeff_dim(); ++i) {
    Vec e = a.expand(cd, a.bracket(X, a.basis_elem(cd, i)));
    for (long k = 0; k < static_cast<long>(e.size()); ++k)
      if (!e[k].is_zero()) ad_coeff[i].emplace_back(k, e[k]);
  }

  // A[v][t]: coefficient of w_v in [X, w_t]; relative slices need [X,W] in W.
  const long nb = s.base_dim();
  std::vector<Vec> A(nb);
  for (long t = 0; t < nb; ++t) {
    A[t] = a.expand(-1, a.bracket(X, a.basis_elem(-1, t)));
    if (s.flavor() == Flavor::relative && !A[t][a.rho_index()].is_zero())
      throw MathConsistencyError("action_columns: X does not preserve W");
  }

  parallel_for(s.dim(), [&](long j) {
    const SliceElem& el = s.elements()[j];
    std::map<long, Rational> acc;
    for (const auto& [k, v] : ad_coeff[el.coeff]) {
      const long row = s.index_of(k, el.mask);
      if (row >= 0) acc[row] += v;
    }
    const std::vector<int> bits = mask_bits(el.mask);
    // diagonal part of the dual action
    Rational diag;
    for (int u : bits) diag += A[u][u];
    if (!diag.is_zero()) {
      const long row = s.index_of(el.coeff, el.mask);
      acc[row] -= diag;
    }
    // off-diagonal replacements S -> (S \ v) + t
    for (int v : bits)
      for (int t = 0; t < nb; ++t) {
        if (el.mask & (1u << t)) continue;
        const Rational& avt = A[t][v];
        if (avt.is_zero()) continue;
        const uint32_t tm = (el.mask & ~(1u << v)) | (1u << t);
        // sign of sorting T with t replaced by v back into S order
        std::vector<int> tuple;
        for (int b : mask_bits(tm)) tuple.push_back(b == t ? v : b);
        const long row = s.index_of(el.coeff, tm);
        acc[row] -= Rational(sort_sign(tuple)) * avt;
      }
    for (auto& [row, val] : acc)
      if (!val.is_zero()) cols[j].emplace_back(row, std::move(val));
  });
  return cols;
}

Vec apply_columns(const SparseCols& cols, long tgt_dim, const Vec& x) {
  if (cols.size() != x.size())
    throw std::invalid_argument("apply_columns: size mismatch");
  Vec y(tgt_dim);
  for (size_t j = 0; j < cols.size(); ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& [row, v] : cols[j]) y[row] += v * x[j];
  }
  return y;
}

SparseCols compose_columns(const SparseCols& first, const SparseCols& then) {
  SparseCols out(first.size());
  for (size_t j = 0; j < first.size(); ++j) {
    std::map<long, Rational> acc;
    for (const auto& [mid, v] : first[j])
      for (const auto& [row, w] : then[mid]) acc[row] += v * w;
    for (auto& [row, v] : acc)
      if (!v.is_zero()) out[j].emplace_back(row, std::move(v));
  }
  return out;
}

SparseCols add_columns(const SparseCols& a, const SparseCols& b, const Rational& sb) {
  SparseCols out(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    std::map<long, Rational> acc;
    for (const auto& [row, v] : a[j]) acc[row] += v;
    for (const auto& [row, v] : b[j]) acc[row] += sb * v;
    for (auto& [row, v] : acc)
      if (!v.is_zero()) out[j].emplace_back(row, std::move(v));
  }
  return out;
}

SparseCols scale_columns(const SparseCols& a, const Rational& s) {
  SparseCols out(a.size());
  for (size_t j = 0; j < a.size(); ++j)
    for (const auto& [row, v] : a[j]) out[j].emplace_back(row, s * v);
  return out;
}

long BlockedMap::total_rank() const {
  std::vector<const ExactMatrix*> ms;
  for (const auto& [w, m] : blocks) ms.push_back(&m);
  std::vector<long> r(ms.size());
  parallel_for(static_cast<long>(ms.size()), [&](long i) { r[i] = rank(*ms[i]); });
  long total = 0;
  for (long x : r) total += x;
  return total;
}

ExactMatrix BlockedMap::dense() const {
  ExactMatrix m(tgt->dim(), src->dim());
  for (const auto& [w, blk] : blocks) {
    const auto& sidx = src->blocks().at(w);
    auto ti = tgt->blocks().find(w);
    if (ti == tgt->blocks().end()) continue;
    for (long c = 0; c < blk.cols(); ++c)
      for (long r = 0; r < blk.rows(); ++r)
        m.at(ti->second[r], sidx[c]) = blk.at(r, c);
  }
  return m;
}

BlockedMap group_by_weight(const Slice& src, const Slice& tgt, const SparseCols& cols) {
  BlockedMap bm;
  bm.src = &src;
  bm.tgt = &tgt;

  // row index -> position within its weight block
  std::unordered_map<long, long> tpos;
  for (const auto& [w, idx] : tgt.blocks())
    for (size_t i = 0; i < idx.size(); ++i) tpos[idx[i]] = static_cast<long>(i);

  for (const auto& [w, sidx] : src.blocks()) {
    auto ti = tgt.blocks().find(w);
    const long trows = ti == tgt.blocks().end() ? 0 : static_cast<long>(ti->second.size());
    ExactMatrix blk(trows, static_cast<long>(sidx.size()));
    for (size_t c = 0; c < sidx.size(); ++c)
      for (const auto& [row, v] : cols[sidx[c]]) {
        if (tgt.elements()[row].wt != w)
          throw MathConsistencyError("group_by_weight: map does not preserve weights");
        blk.at(tpos.at(row), static_cast<long>(c)) = v;
      }
    bm.blocks.emplace(w, std::move(blk));
  }
  return bm;
}

BlockedMap blocked_differential(const Slice& src, const Slice& tgt) {
  return group_by_weight(src, tgt, differential_columns(src, tgt));
}

const Slice& SpencerContext::slice(int p, int q, Flavor f) {
  auto key = std::make_tuple(p, q, static_cast<int>(f));
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, std::make_unique<Slice>(*a_, p, q, f)).first;
  return *it->second;
}

}  // namespace qsp
