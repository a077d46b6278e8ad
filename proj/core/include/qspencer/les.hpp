#pragma once

#include <string>

#include "qspencer/cohomology.hpp"

namespace qsp {

// The short exact sequence of complexes
//   0 -> Cperp(g~) -> C(g~) -> C(g~,W) -> 0
// together with the chain isomorphism
//   phi: Cperp^{p,q}(g~) -> C^{p,q-1}(g~,W),  phi(c) = (-1)^q (i_rho c)|W
// yields, for each band N = p+q, the long exact sequence
//   ... -> H^{p,q-1}(g~,W) -> H^{p,q}(g~) -> H^{p,q}(g~,W)
//                          -> H^{p-1,q}(g~,W) -> H^{p-1,q+1}(g~) -> ...
// In the chosen bases phi sends x (x) w*_S wedge rho* to -x (x) w*_S, so the
// three maps are index games plus one honest connecting zig-zag.

// iota: H^{p,q-1}(g~,W) -> H^{p,q}(g~)   (phi^{-1} followed by inclusion)
// rest: H^{p,q}(g~) -> H^{p,q}(g~,W)     (restriction of cochains)
// conn: H^{p,q}(g~,W) -> H^{p-1,q}(g~,W) (lift, d, pull back along phi)
SparseCols les_iota_columns(SpencerContext& ctx, int p, int q);
SparseCols les_rest_columns(SpencerContext& ctx, int p, int q);
SparseCols les_conn_columns(SpencerContext& ctx, int p, int q);

struct LesNode {
  std::string name;
  int q = 0;
  char type = 'A';  // A ~ H^{p,q-1}(g~,W), B ~ H^{p,q}(g~), C ~ H^{p,q}(g~,W)
  long dim = 0;
  long rank_in = 0;
  long rank_out = 0;
  bool composite_zero = true;
  bool exact = false;
};

struct LesReport {
  int band = 0;
  std::vector<LesNode> nodes;
  bool all_exact = true;
};

// Verifies ker = im at every node of the band-N sequence whose cohomological
// degree q lies in [q_lo, q_hi] (capped at q <= 3 spaces).
LesReport les_zigzag(SpencerContext& ctx, int band, int q_lo = 0, int q_hi = 3);

struct RestrictionIsoReport {
  long dim_abs = 0, dim_rel = 0, rank = 0;
  bool isomorphism = false;
};

// Thm-style check that restriction induces H^{p,q}(g~) ~= H^{p,q}(g~,W).
RestrictionIsoReport restriction_iso_check(SpencerContext& ctx, int p = 1, int q = 2);

}  // namespace qsp
