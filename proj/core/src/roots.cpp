#include "qspencer/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qsp {

RootSystem build_type_a(int l, bool flipped) {
  if (l < 2) throw std::invalid_argument("build_type_a: rank must be >= 2");
  return RootSystem{l, flipped};
}

ECoord RootSystem::simple_root(int i) const {
  if (i < 1 || i > l) throw std::invalid_argument("simple_root: index out of range");
  ECoord v(dim(), 0);
  v[i - 1] = flipped ? -1 : 1;
  v[i] = flipped ? 1 : -1;
  return v;
}

std::vector<ECoord> RootSystem::positive_roots() const {
  std::vector<ECoord> out;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j) {
      ECoord v(dim(), 0);
      v[i] = flipped ? -1 : 1;
      v[j] = flipped ? 1 : -1;
      out.push_back(std::move(v));
    }
  return out;
}

ECoord RootSystem::highest_root() const {
  ECoord v(dim(), 0);
  v[0] = flipped ? -1 : 1;
  v[l] = flipped ? 1 : -1;
  return v;
}

bool RootSystem::is_positive(const ECoord& root) const {
  // A root is +-(e_i - e_j); positivity is decided by the sign at the
  // smaller-index nonzero coordinate.
  for (long x : root)
    if (x != 0) return flipped ? x < 0 : x > 0;
  throw std::invalid_argument("is_positive: zero vector");
}

long pairing(const ECoord& mu, const ECoord& root) {
  long i = -1, j = -1;
  for (size_t k = 0; k < root.size(); ++k) {
    if (root[k] == 1) i = static_cast<long>(k);
    if (root[k] == -1) j = static_cast<long>(k);
  }
  if (i < 0 || j < 0) throw std::invalid_argument("pairing: not a type-A root");
  return mu[i] - mu[j];
}

std::vector<long> simple_coefficients(const RootSystem& rs, const ECoord& v) {
  if (std::accumulate(v.begin(), v.end(), 0L) != 0)
    throw std::invalid_argument("simple_coefficients: not in the root lattice");
  // v = sum c_i delta_i with c_i = v_1 + ... + v_i; flip signs for {-delta_i}.
  std::vector<long> c(rs.l);
  long acc = 0;
  for (int i = 0; i < rs.l; ++i) {
    acc += v[i];
    c[i] = rs.flipped ? -acc : acc;
  }
  return c;
}

ECoord reflect(const RootSystem& rs, int i, const ECoord& mu) {
  if (i < 1 || i > rs.l) throw std::invalid_argument("reflect: index out of range");
  ECoord v = mu;
  std::swap(v[i - 1], v[i]);
  return v;
}

ECoord weyl_apply(const WeylElement& w, const ECoord& mu) {
  ECoord v(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) v[w.perm[i]] = mu[i];
  return v;
}

WeylElement weyl_identity(int l) {
  WeylElement w;
  w.perm.resize(l + 1);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

namespace {

Perm compose(const Perm& a, const Perm& b) {  // (a o b)(i) = a(b(i))
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm simple_perm(int l, int i) {
  Perm p(l + 1);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i - 1], p[i]);
  return p;
}

}  // namespace

WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = weyl_identity(rs.l);
  w.word = word;
  for (int i : word) w.perm = compose(w.perm, simple_perm(rs.l, i));
  return w;
}

long weyl_length(const RootSystem& rs, const Perm& p) {
  // |Phi+ cap sigma(Phi-)|; for type A both sign conventions give the
  // inversion count of the permutation.
  (void)rs;
  long n = 0;
  Perm inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (inv[i] > inv[j]) ++n;
  return n;
}

std::vector<ECoord> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<ECoord> out;
  Perm inv(w.perm.size());
  for (size_t i = 0; i < w.perm.size(); ++i) inv[w.perm[i]] = static_cast<int>(i);
  for (const ECoord& beta : rs.positive_roots()) {
    // beta positive; keep it when sigma^{-1}(beta) is negative.
    ECoord pre(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) pre[inv[i]] = beta[i];
    if (!rs.is_positive(pre)) out.push_back(beta);
  }
  return out;
}

std::vector<WeylElement> elements_of_length(const RootSystem& rs, int q) {
  const long n_pos = static_cast<long>(rs.l) * (rs.l + 1) / 2;
  if (q < 0 || q > n_pos)
    throw std::invalid_argument("elements_of_length: q out of range");

  std::map<Perm, std::vector<int>> layer;
  layer[weyl_identity(rs.l).perm] = {};
  for (int len = 0; len < q; ++len) {
    std::map<Perm, std::vector<int>> next;
    for (const auto& [p, word] : layer)
      for (int i = 1; i <= rs.l; ++i) {
        Perm ext = compose(p, simple_perm(rs.l, i));
        if (weyl_length(rs, ext) != len + 1) continue;
        if (next.count(ext)) continue;
        std::vector<int> w = word;
        w.push_back(i);
        next.emplace(std::move(ext), std::move(w));
      }
    layer = std::move(next);
  }

  std::vector<WeylElement> out;
  out.reserve(layer.size());
  for (const auto& [p, word] : layer) out.push_back(WeylElement{p, word});
  return out;
}

bool equal_mod_ones(const ECoord& a, const ECoord& b) {
  if (a.size() != b.size() || a.empty()) return a.size() == b.size();
  const long d = a[0] - b[0];
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] - b[i] != d) return false;
  return true;
}

}  // namespace qsp
