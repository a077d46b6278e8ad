#pragma once

#include <memory>

#include "qspencer/slices.hpp"

namespace qsp {

struct CohomologyReport {
  int p = 0, q = 0;
  Flavor flavor = Flavor::relative;
  long cochain_dim = 0;
  long rank_out = 0;  // rank of d: C^{p,q} -> C^{p-1,q+1}
  long rank_in = 0;   // rank of d: C^{p+1,q-1} -> C^{p,q}
  long dim = 0;
  Character character;
};

// Dimensions and torus character of H^{p,q}, block by block.
CohomologyReport cohomology(SpencerContext& ctx, int p, int q, Flavor f);

class CohomologySpace;
struct InducedMap;
InducedMap induced_on_h(const CohomologySpace& src, const SparseCols& cochain_map,
                        const CohomologySpace& tgt);

// H^{p,q} with chosen representatives: per weight block a basis of cocycles,
// of boundaries, and a complement of B inside Z (the lexicographically first
// one), plus a solver for quotient coordinates.
class CohomologySpace {
 public:
  CohomologySpace(SpencerContext& ctx, int p, int q, Flavor f);

  const Slice& slice() const { return *slice_; }
  long dim() const { return dim_; }
  long dim_at(const SWeight& w) const;
  const std::vector<SWeight>& keys() const { return keys_; }

  // Representatives of the block's classes as slice-global vectors.
  std::vector<Vec> representatives(const SWeight& w) const;

  // Quotient coordinates of a cocycle given in slice coordinates, restricted
  // to one weight block.  Throws when v is not a cocycle of that block.
  Vec quotient_coords(const SWeight& w, const Vec& slice_vec) const;

 private:
  struct Block {
    std::vector<long> cols;  // slice indices of the block
    ExactMatrix reps;        // block-local H representatives
    std::unique_ptr<LinearSolver> zb;  // solver for [B | reps]
    long b_cols = 0;
    long dim_h = 0;
  };
  const Slice* slice_;
  std::map<SWeight, Block> blocks_;
  std::vector<SWeight> keys_;
  long dim_ = 0;

  friend struct InducedMap;
  friend InducedMap induced_on_h(const CohomologySpace&, const SparseCols&,
                                 const CohomologySpace&);
};

// A map on cohomology induced by a weight-preserving cochain map.
struct InducedMap {
  const CohomologySpace* src = nullptr;
  const CohomologySpace* tgt = nullptr;
  std::map<SWeight, ExactMatrix> blocks;  // tgt.dim_at(w) x src.dim_at(w)
  long rank = 0;

  bool injective() const { return rank == src->dim(); }
  bool surjective() const { return rank == tgt->dim(); }
  bool bijective() const { return injective() && surjective(); }
};

// rank(g o f) over the quotients; exactness at the middle space X of
// f: A -> X, g: X -> B needs composite zero and rank f + rank g = dim X.
bool composite_is_zero(const InducedMap& f, const InducedMap& g);

}  // namespace qsp
