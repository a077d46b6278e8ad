#include <doctest.h>

#include "qspencer/les.hpp"

using namespace qsp;

TEST_CASE("phi is a chain map") {
  // phi d_perp = d_rel phi on the q = 1..3 perp slices, n=2
  GradedAlgebra a(2);
  SpencerContext ctx(a);
  const uint32_t rho_bit = 1u << a.rho_index();

  for (int p : {1, 2})
    for (int q : {1, 2, 3}) {
      const Slice& abs0 = ctx.slice(p, q, Flavor::absolute);
      const Slice& abs1 = ctx.slice(p - 1, q + 1, Flavor::absolute);
      const Slice& rel0 = ctx.slice(p, q - 1, Flavor::relative);
      const Slice& rel1 = ctx.slice(p - 1, q, Flavor::relative);
      if (abs0.dim() == 0) continue;

      SparseCols d_abs = differential_columns(abs0, abs1);
      SparseCols d_rel = differential_columns(rel0, rel1);

      auto phi = [&](const Slice& from, const Slice& to, long idx) {
        // x (x) w*_S wedge rho* -> -x (x) w*_S
        const SliceElem& el = from.elements()[idx];
        REQUIRE((el.mask & rho_bit));
        return to.index_of(el.coeff, el.mask & ~rho_bit);
      };

      for (long j = 0; j < abs0.dim(); ++j) {
        const SliceElem& el = abs0.elements()[j];
        if (!(el.mask & rho_bit)) continue;  // outside Cperp
        // lhs: phi(d_abs(c)); the perp complex is d-stable
        std::map<long, Rational> lhs;
        for (const auto& [row, v] : d_abs[j]) {
          REQUIRE((abs1.elements()[row].mask & rho_bit));
          lhs[phi(abs1, rel1, row)] += -v;
        }
        // rhs: d_rel(phi(c))
        std::map<long, Rational> rhs;
        const long pj = phi(abs0, rel0, j);
        for (const auto& [row, v] : d_rel[pj]) rhs[row] += -v;
        for (auto& [k, v] : rhs) {
          auto it = lhs.find(k);
          const Rational lv = it == lhs.end() ? Rational(0) : it->second;
          CHECK(lv == v);
        }
        for (auto& [k, v] : lhs) {
          auto it = rhs.find(k);
          const Rational rv = it == rhs.end() ? Rational(0) : it->second;
          CHECK(v == rv);
        }
      }
    }
}

TEST_CASE("band 2 segment is exact, n=2") {
  GradedAlgebra a(2);
  SpencerContext ctx(a);
  LesReport rep = les_zigzag(ctx, 2, 1, 3);
  CHECK(rep.all_exact);

  // the four printed groups of the sequence, with their known dimensions
  std::map<std::string, long> dims;
  for (const auto& node : rep.nodes) dims[node.name] = node.dim;
  CHECK(dims.at("H^{1,1}(g~,W)") == 0);
  CHECK(dims.at("H^{0,1}(g~,W)") == 37);
  CHECK(dims.at("H^{0,2}(g~)") == 80);
  CHECK(dims.at("H^{0,2}(g~,W)") == 43);
}

TEST_CASE("band 3 segment is exact and the end map is injective, n=2") {
  GradedAlgebra a(2);
  SpencerContext ctx(a);
  LesReport rep = les_zigzag(ctx, 3, 2, 3);
  CHECK(rep.all_exact);

  // H^{0,2}(g~,W) -> H^{0,3}(g~) is injective: the A-node at q=3 has
  // rank_out equal to its dimension
  bool checked = false;
  for (const auto& node : rep.nodes)
    if (node.q == 3 && node.type == 'A') {
      CHECK(node.name == "H^{0,2}(g~,W)");
      CHECK(node.dim == 43);
      CHECK(node.rank_out == node.dim);
      checked = true;
    }
  CHECK(checked);
}

TEST_CASE("band 5 segment, n=2") {
  GradedAlgebra a(2);
  SpencerContext ctx(a);
  LesReport rep = les_zigzag(ctx, 5, 2, 3);
  CHECK(rep.all_exact);
  for (const auto& node : rep.nodes) {
    if (node.name == "H^{2,2}(g~,W)") CHECK(node.dim == 0);
    if (node.name == "H^{2,3}(g~)") CHECK(node.dim == 0);
  }
}

TEST_CASE("restriction induces H^{1,2}(g~) ~ H^{1,2}(g~,W), n=2") {
  GradedAlgebra a(2);
  SpencerContext ctx(a);
  RestrictionIsoReport rep = restriction_iso_check(ctx);
  CHECK(rep.dim_abs == rep.dim_rel);
  CHECK(rep.isomorphism);
}
