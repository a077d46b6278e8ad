#include "qspencer/kostant.hpp"

#include <algorithm>

namespace qsp {

long grading_eval(const ECoord& mu) { return mu[0] + mu[1]; }

namespace {

// Longest element of the Levi Weyl group: swap coordinates 1,2 and reverse
// 3..l+1.  Sends the Delta-lowest weight of an irreducible g^0 module to its
// delta-highest weight.
ECoord levi_flip(const ECoord& mu) {
  ECoord v = mu;
  std::swap(v[0], v[1]);
  std::reverse(v.begin() + 2, v.end());
  return v;
}

}  // namespace

std::vector<HasseEntry> hasse_diagram(int n, int q) {
  if (n < 2) throw std::invalid_argument("hasse_diagram: n must be >= 2");
  if (q < 0 || q > 3) throw std::invalid_argument("hasse_diagram: q must be 0..3");
  const int l = 2 * n + 1;
  RootSystem rs = build_type_a(l, /*flipped=*/true);
  const ECoord theta = rs.highest_root();

  std::vector<HasseEntry> out;
  for (WeylElement& w : elements_of_length(rs, q)) {
    std::vector<ECoord> inv = inversion_set(rs, w);
    bool in_hat = true;
    long beta_e = 0;
    for (const ECoord& b : inv) {
      const long be = grading_eval(b);
      if (be == 0) {
        in_hat = false;  // alpha_2 coefficient vanishes
        break;
      }
      beta_e += be;
    }
    if (!in_hat) continue;

    HasseEntry e;
    e.sigma = w;
    e.inversions = inv;
    e.q = q;
    e.sigma_theta = weyl_apply(w, theta);
    e.xi = e.sigma_theta;
    for (const ECoord& b : inv)
      for (size_t i = 0; i < e.xi.size(); ++i) e.xi[i] -= b[i];

    // sigma(theta)(E) = sum beta_i(E) + p + q - 1
    const long lhs = grading_eval(e.sigma_theta);
    const long p = lhs - beta_e - q + 1;
    if (p < 0 || p > 2)
      throw MathConsistencyError("hasse_diagram: bidegree out of the graded range");
    e.p = static_cast<int>(p);

    // dominant labels for sl(2) x sl(2n): flip by the Levi longest element,
    // then read fundamental-weight coordinates.
    const ECoord mu = levi_flip(e.xi);
    e.omega1 = mu[0] - mu[1];
    for (int i = 3; i <= l; ++i) e.omega_slm.push_back(mu[i - 1] - mu[i]);
    if (e.omega1 < 0 ||
        std::any_of(e.omega_slm.begin(), e.omega_slm.end(), [](long x) { return x < 0; }))
      throw MathConsistencyError("hasse_diagram: non-dominant Levi weight");
    e.dim = (e.omega1 + 1) * slm_dim(2 * n, e.omega_slm);

    out.push_back(std::move(e));
  }
  return out;
}

long long kostant_dimension(const std::vector<HasseEntry>& entries, int p) {
  long long d = 0;
  for (const HasseEntry& e : entries)
    if (e.p == p) d += e.dim;
  return d;
}

}  // namespace qsp
