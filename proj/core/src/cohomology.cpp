#include "qspencer/cohomology.hpp"

#include <array>

#include "qspencer/threads.hpp"

namespace qsp {

CohomologyReport cohomology(SpencerContext& ctx, int p, int q, Flavor f) {
  CohomologyReport rep;
  rep.p = p;
  rep.q = q;
  rep.flavor = f;

  const Slice& c = ctx.slice(p, q, f);
  rep.cochain_dim = c.dim();
  if (c.dim() == 0) return rep;

  BlockedMap dout = blocked_differential(c, ctx.slice(p - 1, q + 1, f));
  BlockedMap din = blocked_differential(ctx.slice(p + 1, q - 1, f), c);

  struct Item { const SWeight* w; long dim_c; const ExactMatrix* out; const ExactMatrix* in; };
  std::vector<Item> items;
  for (const auto& [w, idx] : c.blocks()) {
    Item it{&w, static_cast<long>(idx.size()), nullptr, nullptr};
    if (auto i = dout.blocks.find(w); i != dout.blocks.end()) it.out = &i->second;
    if (auto i = din.blocks.find(w); i != din.blocks.end()) it.in = &i->second;
    items.push_back(it);
  }

  std::vector<std::array<long, 2>> ranks(items.size());
  std::atomic<long> done{0};
  parallel_for(static_cast<long>(items.size()), [&](long i) {
    ranks[i][0] = items[i].out ? rank(*items[i].out) : 0;
    ranks[i][1] = items[i].in ? rank(*items[i].in) : 0;
    report_progress("cohomology", ++done, static_cast<long>(items.size()));
  });

  for (size_t i = 0; i < items.size(); ++i) {
    const long h = items[i].dim_c - ranks[i][0] - ranks[i][1];
    if (h < 0) throw MathConsistencyError("cohomology: negative block dimension");
    rep.rank_out += ranks[i][0];
    rep.rank_in += ranks[i][1];
    rep.dim += h;
    if (h > 0) rep.character[*items[i].w] = h;
  }
  return rep;
}

CohomologySpace::CohomologySpace(SpencerContext& ctx, int p, int q, Flavor f)
    : slice_(&ctx.slice(p, q, f)) {
  if (slice_->dim() == 0) return;

  BlockedMap dout = blocked_differential(*slice_, ctx.slice(p - 1, q + 1, f));
  BlockedMap din = blocked_differential(ctx.slice(p + 1, q - 1, f), *slice_);

  struct Work { const SWeight* w; const std::vector<long>* cols; };
  std::vector<Work> work;
  for (const auto& [w, idx] : slice_->blocks()) work.push_back({&w, &idx});
  std::vector<Block> built(work.size());

  parallel_for(static_cast<long>(work.size()), [&](long i) {
    const SWeight& w = *work[i].w;
    Block blk;
    blk.cols = *work[i].cols;
    const long bd = static_cast<long>(blk.cols.size());

    std::vector<Vec> zcols;
    if (auto it = dout.blocks.find(w); it != dout.blocks.end() && it->second.rows() > 0) {
      zcols = kernel_basis(it->second);
    } else {
      for (long c = 0; c < bd; ++c) {
        Vec e(bd);
        e[c] = 1;
        zcols.push_back(std::move(e));
      }
    }
    ExactMatrix z = ExactMatrix::from_columns(bd, zcols);

    ExactMatrix b(bd, 0);
    if (auto it = din.blocks.find(w); it != din.blocks.end() && it->second.cols() > 0)
      b = it->second.select_columns(column_space_pivots(it->second));
    blk.b_cols = b.cols();

    // complement of B inside Z, lexicographically first
    ExactMatrix bz = ExactMatrix::hcat(b, z);
    std::vector<long> reps_idx;
    for (long piv : column_space_pivots(bz))
      if (piv >= b.cols()) reps_idx.push_back(piv - b.cols());
    blk.reps = z.select_columns(reps_idx);
    blk.dim_h = blk.reps.cols();
    if (blk.dim_h != z.cols() - b.cols())
      throw MathConsistencyError("CohomologySpace: B not contained in Z");
    blk.zb = std::make_unique<LinearSolver>(ExactMatrix::hcat(b, blk.reps));
    built[i] = std::move(blk);
  });

  for (size_t i = 0; i < work.size(); ++i) {
    dim_ += built[i].dim_h;
    blocks_.emplace(*work[i].w, std::move(built[i]));
  }
  for (const auto& [w, blk] : blocks_)
    if (blk.dim_h > 0) keys_.push_back(w);
}

long CohomologySpace::dim_at(const SWeight& w) const {
  auto it = blocks_.find(w);
  return it == blocks_.end() ? 0 : it->second.dim_h;
}

std::vector<Vec> CohomologySpace::representatives(const SWeight& w) const {
  std::vector<Vec> out;
  auto it = blocks_.find(w);
  if (it == blocks_.end()) return out;
  for (long c = 0; c < it->second.reps.cols(); ++c) {
    Vec v(slice_->dim());
    for (size_t r = 0; r < it->second.cols.size(); ++r)
      v[it->second.cols[r]] = it->second.reps.at(static_cast<long>(r), c);
    out.push_back(std::move(v));
  }
  return out;
}

Vec CohomologySpace::quotient_coords(const SWeight& w, const Vec& slice_vec) const {
  auto it = blocks_.find(w);
  if (it == blocks_.end()) {
    for (const Rational& x : slice_vec)
      if (!x.is_zero())
        throw MathConsistencyError("quotient_coords: nonzero vector in empty block");
    return {};
  }
  const Block& blk = it->second;
  Vec local(blk.cols.size());
  std::vector<bool> in_block(slice_vec.size(), false);
  for (size_t r = 0; r < blk.cols.size(); ++r) {
    local[r] = slice_vec[blk.cols[r]];
    in_block[blk.cols[r]] = true;
  }
  for (size_t i = 0; i < slice_vec.size(); ++i)
    if (!in_block[i] && !slice_vec[i].is_zero())
      throw MathConsistencyError("quotient_coords: support outside weight block");
  auto x = blk.zb->solve(local);
  if (!x) throw MathConsistencyError("quotient_coords: vector is not a cocycle");
  Vec out(blk.dim_h);
  for (long i = 0; i < blk.dim_h; ++i) out[i] = (*x)[blk.b_cols + i];
  return out;
}

InducedMap induced_on_h(const CohomologySpace& src, const SparseCols& cochain_map,
                        const CohomologySpace& tgt) {
  InducedMap im;
  im.src = &src;
  im.tgt = &tgt;

  const std::vector<SWeight>& keys = src.keys();
  std::vector<ExactMatrix> mats(keys.size());
  std::vector<long> ranks(keys.size());

  parallel_for(static_cast<long>(keys.size()), [&](long ki) {
    const SWeight& w = keys[ki];
    const long sd = src.dim_at(w), td = tgt.dim_at(w);
    ExactMatrix m(td, sd);
    std::vector<Vec> reps = src.representatives(w);
    for (long c = 0; c < sd; ++c) {
      Vec img = apply_columns(cochain_map, tgt.slice().dim(), reps[c]);
      Vec q = tgt.quotient_coords(w, img);
      for (long r = 0; r < td; ++r) m.at(r, c) = q[r];
    }
    ranks[ki] = rank(m);
    mats[ki] = std::move(m);
  });

  for (size_t i = 0; i < keys.size(); ++i) {
    im.rank += ranks[i];
    im.blocks.emplace(keys[i], std::move(mats[i]));
  }
  return im;
}

bool composite_is_zero(const InducedMap& f, const InducedMap& g) {
  for (const auto& [w, fm] : f.blocks) {
    auto it = g.blocks.find(w);
    if (it == g.blocks.end()) continue;  // g's domain block is trivial
    if (!it->second.multiply(fm).is_zero()) return false;
  }
  return true;
}

}  // namespace qsp
