#include <doctest.h>

#include <random>

#include "qspencer/quaternions.hpp"

using namespace qsp;

namespace {

bool is_zero_matrix(const ExactMatrix& m) { return m.is_zero(); }

ExactMatrix jacobi(const GradedAlgebra& a, const ExactMatrix& x,
                   const ExactMatrix& y, const ExactMatrix& z) {
  ExactMatrix s = a.bracket(a.bracket(x, y), z);
  ExactMatrix t = a.bracket(a.bracket(y, z), x);
  ExactMatrix u = a.bracket(a.bracket(z, x), y);
  ExactMatrix out(s.rows(), s.cols());
  for (long r = 0; r < s.rows(); ++r)
    for (long c = 0; c < s.cols(); ++c)
      out.at(r, c) = s.at(r, c) + t.at(r, c) + u.at(r, c);
  return out;
}

const ExactMatrix& pick(const GradedAlgebra& a, long flat) {
  const long dv = a.dim(-1), d0 = a.dim(0);
  if (flat < dv) return a.basis_elem(-1, flat);
  if (flat < dv + d0) return a.basis_elem(0, flat - dv);
  return a.basis_elem(1, flat - dv - d0);
}

}  // namespace

TEST_CASE("graded dimensions") {
  CHECK_THROWS_AS(GradedAlgebra(1), std::invalid_argument);

  GradedAlgebra a2(2);
  CHECK(a2.total_dim() == 35);
  CHECK(a2.dim(-1) == 8);
  CHECK(a2.dim(0) == 19);
  CHECK(a2.dim(1) == 8);

  GradedAlgebra a3(3);
  CHECK(a3.dim(-1) == 12);
  CHECK(a3.dim(0) == 39);
  CHECK(a3.dim(1) == 12);
}

TEST_CASE("g^{-1} is abelian and grading is compatible") {
  GradedAlgebra a(2);
  for (long i = 0; i < a.dim(-1); ++i)
    for (long j = 0; j < a.dim(-1); ++j)
      CHECK(is_zero_matrix(a.bracket(a.basis_elem(-1, i), a.basis_elem(-1, j))));

  // [g^p, g^q] in g^{p+q}, with pieces outside the range vanishing
  for (int p : {-1, 0, 1})
    for (int q : {-1, 0, 1})
      for (long i = 0; i < a.dim(p); ++i)
        for (long j = 0; j < a.dim(q); ++j) {
          ExactMatrix b = a.bracket(a.basis_elem(p, i), a.basis_elem(q, j));
          if (p + q < -1 || p + q > 1)
            CHECK(is_zero_matrix(b));
          else
            CHECK_NOTHROW(a.expand(p + q, b));
        }
}

TEST_CASE("Jacobi identity") {
  GradedAlgebra a(2);
  const long total = a.total_dim();
  SUBCASE("exhaustive n=2") {
    for (long x = 0; x < total; ++x)
      for (long y = x + 1; y < total; ++y)
        for (long z = y + 1; z < total; ++z)
          CHECK(is_zero_matrix(jacobi(a, pick(a, x), pick(a, y), pick(a, z))));
  }
  SUBCASE("randomized n=3,4") {
    for (int n : {3, 4}) {
      GradedAlgebra an(n);
      std::mt19937 rng(42 + n);
      std::uniform_int_distribution<long> d(0, an.total_dim() - 1);
      for (int trial = 0; trial < 10000; ++trial)
        CHECK(is_zero_matrix(
            jacobi(an, pick(an, d(rng)), pick(an, d(rng)), pick(an, d(rng)))));
    }
  }
}

TEST_CASE("subspace table") {
  for (int n : {2, 3}) {
    GradedAlgebra a(n);
    auto t = a.subspaces();
    CHECK(static_cast<long>(t.u_indices.size()) == 4 * n - 4);
    CHECK(t.uperp_indices.size() == 3);
    CHECK(static_cast<long>(t.w_indices.size()) == 4 * n - 1);
    CHECK(static_cast<long>(t.v_indices.size()) == 4 * n);
    CHECK(t.wperp_index == 4 * n - 1);
    if (n == 2) CHECK(t.w_indices.size() == 7);

    // S^2H vectors and rho are independent and span the complement of EH
    ExactMatrix span(a.dim_v(), 4);
    for (int kidx = 0; kidx < 4; ++kidx) {
      Vec e = a.expand(-1, a.basis_elem(-1, a.u_dim() + kidx));
      for (long r = 0; r < a.dim_v(); ++r) span.at(r, kidx) = e[r];
    }
    CHECK(rank(span) == 4);
    for (int kidx = 0; kidx < 4; ++kidx)
      for (long r = 0; r < a.u_dim(); ++r) CHECK(span.at(r, kidx).is_zero());
  }
}

TEST_CASE("levi generators") {
  for (int n : {2, 3}) {
    GradedAlgebra a(n);
    const auto& lv = a.levi();

    // sl(2) triple relations
    CHECK(a.bracket(lv.e, lv.f) == lv.h);
    ExactMatrix he = a.bracket(lv.h, lv.e);
    ExactMatrix hf = a.bracket(lv.h, lv.f);
    for (long r = 0; r < he.rows(); ++r)
      for (long c = 0; c < he.cols(); ++c) {
        CHECK(he.at(r, c) == Rational(2) * lv.e.at(r, c));
        CHECK(hf.at(r, c) == Rational(-2) * lv.f.at(r, c));
      }

    // every generator preserves W and kills rho
    for (const ExactMatrix& x : lv.all) {
      for (long t = 0; t < a.w_dim(); ++t) {
        Vec img = a.expand(-1, a.bracket(x, a.basis_elem(-1, t)));
        CHECK(img[a.rho_index()].is_zero());
      }
      CHECK(is_zero_matrix(a.bracket(x, a.rho())));
    }

    // generated subalgebra has the right dimension (closure under bracket)
    std::vector<ExactMatrix> span = lv.all;
    auto to_vec = [&](const ExactMatrix& x) { return a.expand(0, x); };
    auto rank_of = [&](const std::vector<ExactMatrix>& v) {
      std::vector<Vec> cols;
      for (const auto& x : v) cols.push_back(to_vec(x));
      return rank(ExactMatrix::from_columns(a.dim(0), cols));
    };
    long r = rank_of(span);
    while (true) {
      std::vector<ExactMatrix> next = span;
      for (size_t i = 0; i < lv.all.size(); ++i)
        for (size_t j = 0; j < span.size(); ++j)
          next.push_back(a.bracket(lv.all[i], span[j]));
      long r2 = rank_of(next);
      span = std::move(next);
      if (r2 == r) break;
      r = r2;
    }
    CHECK(r == a.levi_dim());
    if (n == 2) CHECK(a.levi_dim() == 6);
  }
}

TEST_CASE("stabilizer of W") {
  for (int n : {2, 3}) {
    GradedAlgebra a(n);
    auto basis = a.stabilizer_of_w();
    CHECK(static_cast<long>(basis.size()) == GradedAlgebra::stabilizer_dim_formula(n));
    if (n == 2) CHECK(basis.size() == 12);
    if (n == 3) CHECK(basis.size() == 28);

    // every Levi generator lies in the stabilizer span
    ExactMatrix span = ExactMatrix::from_columns(a.dim(0), basis);
    for (const ExactMatrix& x : a.levi().all)
      CHECK(membership(a.expand(0, x), span).has_value());

    // and W is really a submodule for each stabilizer element
    const ExactMatrix dense = span;  // columns are coordinates over g^0
    for (long c = 0; c < dense.cols(); ++c) {
      ExactMatrix x(a.matrix_size(), a.matrix_size());
      for (long i = 0; i < a.dim(0); ++i) {
        if (dense.at(i, c).is_zero()) continue;
        const ExactMatrix& b = a.basis_elem(0, i);
        for (long r = 0; r < x.rows(); ++r)
          for (long cc = 0; cc < x.cols(); ++cc)
            if (!b.at(r, cc).is_zero()) x.at(r, cc) += dense.at(i, c) * b.at(r, cc);
      }
      for (long t = 0; t < a.w_dim(); ++t)
        CHECK(a.expand(-1, a.bracket(x, a.basis_elem(-1, t)))[a.rho_index()].is_zero());
    }
  }
}

TEST_CASE("weights of distinguished vectors") {
  GradedAlgebra a(2);
  // rho is s-invariant: weight zero
  const SWeight& wr = a.weight(-1, a.rho_index());
  CHECK(wr.a == 0);
  for (long d : wr.dyn) CHECK(d == 0);
  // the S^2H triple has sl(2) weights 0, 2, -2
  CHECK(a.weight(-1, a.u_dim()).a == 0);
  CHECK(a.weight(-1, a.u_dim() + 1).a == 2);
  CHECK(a.weight(-1, a.u_dim() + 2).a == -2);
}

TEST_CASE("prolongation action formula") {
  GradedAlgebra a(2);
  RealForm rf(a);

  const Quaternion units[4] = {RealForm::real_basis_unit(0), RealForm::real_basis_unit(1),
                               RealForm::real_basis_unit(2), RealForm::real_basis_unit(3)};

  // exhaustive comparison over all 8 x 8 real basis pairs
  for (int sa = 0; sa < 2; ++sa)
    for (int ua = 0; ua < 4; ++ua)
      for (int sb = 0; sb < 2; ++sb)
        for (int ub = 0; ub < 4; ++ub) {
          ExactMatrix lhs = rf.dual_action_bracket(sa, units[ua], sb, units[ub]);
          ExactMatrix rhs = rf.dual_action_formula(sa, units[ua], sb, units[ub]);
          CHECK(lhs == rhs);
        }

  // zero functional gives the zero endomorphism
  CHECK(rf.dual_action_bracket(0, Quaternion{}, 0, Quaternion::one()).is_zero());

  // frozen trace constant: trace = -(4n+4) Re(p h) delta_{ab} for the
  // normalization v*(x) = -Re(p x_a)
  for (int sa = 0; sa < 2; ++sa)
    for (int sb = 0; sb < 2; ++sb)
      for (int ua = 0; ua < 4; ++ua)
        for (int ub = 0; ub < 4; ++ub) {
          ExactMatrix m = rf.dual_action_bracket(sa, units[ua], sb, units[ub]);
          Rational tr;
          for (long i = 0; i < m.rows(); ++i) tr += m.at(i, i);
          const Rational re_ph = (units[ua] * units[ub]).r;
          const Rational expected =
              sa == sb ? Rational(-12) * re_ph : Rational(0);
          CHECK(tr == expected);
        }
}
