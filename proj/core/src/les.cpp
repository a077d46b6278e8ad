#include "qspencer/les.hpp"

namespace qsp {

SparseCols les_iota_columns(SpencerContext& ctx, int p, int q) {
  const Slice& src = ctx.slice(p, q - 1, Flavor::relative);
  const Slice& tgt = ctx.slice(p, q, Flavor::absolute);
  const uint32_t rho_bit = 1u << ctx.algebra().rho_index();

  SparseCols cols(src.dim());
  for (long j = 0; j < src.dim(); ++j) {
    const SliceElem& el = src.elements()[j];
    const long row = tgt.index_of(el.coeff, el.mask | rho_bit);
    if (row < 0) throw MathConsistencyError("les_iota: missing target element");
    cols[j].emplace_back(row, Rational(-1));
  }
  return cols;
}

SparseCols les_rest_columns(SpencerContext& ctx, int p, int q) {
  const Slice& src = ctx.slice(p, q, Flavor::absolute);
  const Slice& tgt = ctx.slice(p, q, Flavor::relative);
  const uint32_t rho_bit = 1u << ctx.algebra().rho_index();

  SparseCols cols(src.dim());
  for (long j = 0; j < src.dim(); ++j) {
    const SliceElem& el = src.elements()[j];
    if (el.mask & rho_bit) continue;
    const long row = tgt.index_of(el.coeff, el.mask);
    if (row < 0) throw MathConsistencyError("les_rest: missing target element");
    cols[j].emplace_back(row, Rational(1));
  }
  return cols;
}

SparseCols les_conn_columns(SpencerContext& ctx, int p, int q) {
  // lift (tautological section), absolute differential, then phi
  const Slice& src = ctx.slice(p, q, Flavor::relative);
  const Slice& mid_src = ctx.slice(p, q, Flavor::absolute);
  const Slice& mid_tgt = ctx.slice(p - 1, q + 1, Flavor::absolute);
  const Slice& tgt = ctx.slice(p - 1, q, Flavor::relative);
  const uint32_t rho_bit = 1u << ctx.algebra().rho_index();

  SparseCols d_abs = differential_columns(mid_src, mid_tgt);

  SparseCols cols(src.dim());
  for (long j = 0; j < src.dim(); ++j) {
    const SliceElem& el = src.elements()[j];
    const long lifted = mid_src.index_of(el.coeff, el.mask);
    if (lifted < 0) throw MathConsistencyError("les_conn: missing lift");
    for (const auto& [row, v] : d_abs[lifted]) {
      const SliceElem& tel = mid_tgt.elements()[row];
      if (!(tel.mask & rho_bit)) continue;  // project to Cperp before phi
      const long out = tgt.index_of(tel.coeff, tel.mask & ~rho_bit);
      if (out < 0) throw MathConsistencyError("les_conn: missing target element");
      cols[j].emplace_back(out, -v);
    }
  }
  return cols;
}

namespace {

std::string node_name(int p, int q, bool relative) {
  std::string s = "H^{" + std::to_string(p) + "," + std::to_string(q) + "}(g~";
  if (relative) s += ",W";
  return s + ")";
}

}  // namespace

LesReport les_zigzag(SpencerContext& ctx, int band, int q_lo, int q_hi) {
  if (q_lo < 0) q_lo = 0;
  if (q_hi > 3) q_hi = 3;
  if (q_lo > q_hi) throw std::invalid_argument("les_zigzag: empty q range");

  LesReport rep;
  rep.band = band;

  // Spaces for q in [q_lo-1, q_hi+1]: A_q = H^{N-q,q-1}(W), B_q = H^{N-q,q}(g~),
  // C_q = H^{N-q,q}(W).  A_{q_hi+1} is needed for exactness at C_{q_hi}.
  std::map<int, std::unique_ptr<CohomologySpace>> A, B, C;
  for (int q = q_lo - 1; q <= q_hi + 1; ++q) {
    if (q < 0) continue;
    const int p = band - q;
    A[q] = std::make_unique<CohomologySpace>(ctx, p, q - 1, Flavor::relative);
    if (q <= q_hi) {
      B[q] = std::make_unique<CohomologySpace>(ctx, p, q, Flavor::absolute);
      C[q] = std::make_unique<CohomologySpace>(ctx, p, q, Flavor::relative);
    }
  }

  std::map<int, InducedMap> iota, rest, conn;  // conn[q]: C_q -> A_{q+1}
  for (int q = q_lo - 1; q <= q_hi + 1; ++q) {
    if (q < 0) continue;
    const int p = band - q;
    if (A.count(q) && B.count(q))
      iota[q] = induced_on_h(*A[q], les_iota_columns(ctx, p, q), *B[q]);
    if (B.count(q) && C.count(q))
      rest[q] = induced_on_h(*B[q], les_rest_columns(ctx, p, q), *C[q]);
    if (C.count(q) && A.count(q + 1))
      conn[q] = induced_on_h(*C[q], les_conn_columns(ctx, p, q), *A[q + 1]);
  }

  auto add_node = [&](const std::string& name, int q, char type, long dim,
                      const InducedMap* in, const InducedMap* out) {
    LesNode node;
    node.name = name;
    node.q = q;
    node.type = type;
    node.dim = dim;
    node.rank_in = in ? in->rank : 0;
    node.rank_out = out ? out->rank : 0;
    node.composite_zero = (in && out) ? composite_is_zero(*in, *out) : true;
    node.exact = node.composite_zero && node.rank_in + node.rank_out == dim;
    rep.nodes.push_back(node);
    rep.all_exact = rep.all_exact && node.exact;
  };

  for (int q = q_lo; q <= q_hi; ++q) {
    const int p = band - q;
    add_node(node_name(p, q - 1, true), q, 'A', A[q]->dim(),
             conn.count(q - 1) ? &conn[q - 1] : nullptr,
             iota.count(q) ? &iota[q] : nullptr);
    add_node(node_name(p, q, false), q, 'B', B[q]->dim(),
             iota.count(q) ? &iota[q] : nullptr,
             rest.count(q) ? &rest[q] : nullptr);
    add_node(node_name(p, q, true), q, 'C', C[q]->dim(),
             rest.count(q) ? &rest[q] : nullptr,
             conn.count(q) ? &conn[q] : nullptr);
  }
  return rep;
}

RestrictionIsoReport restriction_iso_check(SpencerContext& ctx, int p, int q) {
  CohomologySpace abs(ctx, p, q, Flavor::absolute);
  CohomologySpace rel(ctx, p, q, Flavor::relative);
  InducedMap m = induced_on_h(abs, les_rest_columns(ctx, p, q), rel);
  RestrictionIsoReport rep;
  rep.dim_abs = abs.dim();
  rep.dim_rel = rel.dim();
  rep.rank = m.rank;
  rep.isomorphism = m.bijective();
  return rep;
}

}  // namespace qsp
