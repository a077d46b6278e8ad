#include "qspencer/characters.hpp"

#include <algorithm>
#include <numeric>

namespace qsp {

Character char_add(const Character& a, const Character& b, long scale) {
  Character out = a;
  for (const auto& [w, m] : b) {
    out[w] += scale * m;
    if (out[w] == 0) out.erase(w);
  }
  return out;
}

Character char_product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      out[wa + wb] += ma * mb;
    }
  return out;
}

Character sl2_char(long a, int m) {
  Character c;
  for (long k = 0; k <= a; ++k)
    c[SWeight{a - 2 * k, std::vector<long>(m - 1, 0)}] += 1;
  return c;
}

namespace {

// sl(m) weights in shifted coordinates: length-m integer vectors with a fixed
// total, the highest weight being the partition lambda_i = sum_{j>=i} dynF_j.
using SVec = std::vector<long>;

SVec shifted_from_dyn(int m, const std::vector<long>& dynF) {
  SVec l(m, 0);
  for (int i = m - 2; i >= 0; --i) l[i] = l[i + 1] + dynF[i];
  return l;
}

std::vector<long> dyn_from_shifted(const SVec& v) {
  std::vector<long> d(v.size() - 1);
  for (size_t i = 0; i + 1 < v.size(); ++i) d[i] = v[i] - v[i + 1];
  return d;
}

long dot(const SVec& a, const SVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

SVec rho_shifted(int m) {
  SVec r(m);
  for (int i = 0; i < m; ++i) r[i] = m - 1 - i;
  return r;
}

// lambda majorizes mu (same total): all prefix sums of lambda dominate.
bool majorizes(const SVec& lambda, const SVec& mu) {
  long sl = 0, sm = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sm > sl) return false;
  }
  return sl == sm;
}

// All dominant weights of V_lambda: partitions of the same total into m
// nonnegative parts majorized by lambda.
std::vector<SVec> dominant_weights(const SVec& lambda) {
  const int m = static_cast<int>(lambda.size());
  const long total = std::accumulate(lambda.begin(), lambda.end(), 0L);
  std::vector<SVec> out;
  SVec cur(m, 0);
  // enumerate weakly decreasing nonnegative tuples with the given total
  auto rec = [&](auto&& self, int pos, long remaining, long cap) -> void {
    if (pos == m - 1) {
      if (remaining <= cap) {
        cur[pos] = remaining;
        if (majorizes(lambda, cur)) out.push_back(cur);
      }
      return;
    }
    const long low = (remaining + (m - pos) - 1) / (m - pos);  // ceil for decreasing
    for (long v = std::min(cap, remaining); v >= low; --v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v, v);
    }
  };
  rec(rec, 0, total, total);
  return out;
}

// Freudenthal recursion for the dominant multiplicities of V_lambda.
std::map<SVec, long> freudenthal_dominant(int m, const SVec& lambda) {
  std::vector<SVec> doms = dominant_weights(lambda);
  const SVec rho = rho_shifted(m);
  std::sort(doms.begin(), doms.end(), [&](const SVec& a, const SVec& b) {
    const long da = dot(a, rho), db = dot(b, rho);
    if (da != db) return da > db;
    return a > b;
  });

  std::map<SVec, long> mult;
  auto lookup = [&](SVec w) -> long {
    for (long x : w)
      if (x < 0) return 0;
    std::sort(w.begin(), w.end(), std::greater<>());
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  };

  for (const SVec& mu : doms) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    long long acc = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        SVec w = mu;
        for (long k = 1;; ++k) {
          w[i] += 1;
          w[j] -= 1;  // mu + k alpha, alpha = e_i - e_j
          const long mw = lookup(w);
          if (mw == 0) break;
          acc += 2LL * mw * (w[i] - w[j]);
        }
      }
    // |lambda+rho|^2 - |mu+rho|^2, invariant under the common shift
    SVec lr = lambda, mr = mu;
    for (int i = 0; i < m; ++i) {
      lr[i] += rho[i];
      mr[i] += rho[i];
    }
    const long long denom = static_cast<long long>(dot(lr, lr)) - dot(mr, mr);
    if (denom <= 0 || acc % denom != 0)
      throw MathConsistencyError("freudenthal: non-integral multiplicity");
    mult[mu] = static_cast<long>(acc / denom);
  }
  return mult;
}

// Distinct permutations of a dominant weight = its Weyl orbit.
std::vector<SVec> weyl_orbit(const SVec& dom) {
  SVec v = dom;
  std::sort(v.begin(), v.end());
  std::vector<SVec> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

struct DictEntry {
  const char* name;
  bool ok;
  std::vector<long> dynF;
};

std::vector<DictEntry> dictionary(int m) {
  auto fund = [m](int i) {  // omega'_i, 1-based; ok when 1 <= i <= m-1
    std::vector<long> d(m - 1, 0);
    if (i >= 1 && i <= m - 1) d[i - 1] = 1;
    return d;
  };
  auto add = [m](std::vector<long> a, const std::vector<long>& b) {
    for (int i = 0; i < m - 1; ++i) a[i] += b[i];
    return a;
  };
  std::vector<DictEntry> dict;
  dict.push_back({"Triv", true, std::vector<long>(m - 1, 0)});
  dict.push_back({"E", true, fund(1)});
  dict.push_back({"E*", true, fund(m - 1)});
  // L^2 E* degenerates to the trivial module at m = 2 but still exists
  dict.push_back({"L2E*", true, fund(m - 2)});
  dict.push_back({"L3E*", m >= 3, fund(m - 3)});
  dict.push_back({"S2E*", true, add(fund(m - 1), fund(m - 1))});
  dict.push_back({"Ad", true, add(fund(1), fund(m - 1))});
  dict.push_back({"C", true, add(fund(1), add(fund(m - 1), fund(m - 1)))});
  dict.push_back({"D", m >= 3, add(fund(1), fund(m - 2))});
  dict.push_back({"V", m >= 4, add(fund(1), fund(m - 3))});
  return dict;
}

}  // namespace

long long slm_dim(int m, const std::vector<long>& dynF) {
  if (static_cast<int>(dynF.size()) != m - 1)
    throw std::invalid_argument("slm_dim: label size mismatch");
  for (long d : dynF)
    if (d < 0) throw std::invalid_argument("slm_dim: non-dominant weight");
  SVec l = shifted_from_dyn(m, dynF);
  Rational dim(1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      dim *= Rational(l[i] - l[j] + j - i, j - i);
  if (dim.denominator() != 1)
    throw MathConsistencyError("slm_dim: non-integral dimension");
  return dim.numerator().get_si();
}

Rational casimir_slm_eigenvalue(int m, const std::vector<long>& dynF) {
  const SVec sh = shifted_from_dyn(m, dynF);
  const SVec rho = rho_shifted(m);
  const long total = std::accumulate(sh.begin(), sh.end(), 0L);
  // mean-zero representatives: lambda0 = sh - total/m, rho0 = rho - (m-1)/2
  Rational norm2, cross;
  for (int i = 0; i < m; ++i) {
    const Rational li = Rational(sh[i]) - Rational(total, m);
    norm2 += li * li;
    cross += li * (Rational(rho[i]) - Rational(m - 1, 2));
  }
  return norm2 + Rational(2) * cross;
}

Character irrep_character(int m, long a, const std::vector<long>& dynF) {
  std::map<SVec, long> dom = freudenthal_dominant(m, shifted_from_dyn(m, dynF));
  Character slm;
  for (const auto& [w, mult] : dom)
    for (const SVec& o : weyl_orbit(w)) slm[SWeight{0, dyn_from_shifted(o)}] += mult;
  return char_product(sl2_char(a, m), slm);
}

std::string IrrepLabel::display() const {
  std::string base = name;
  if (base.empty()) {
    base = "[";
    for (size_t i = 0; i < dynF.size(); ++i)
      base += (i ? "," : "") + std::to_string(dynF[i]);
    base += "]";
  }
  if (a == 0) return base;
  const std::string h = "S" + std::to_string(a) + "H";
  return base == "Triv" ? h : base + " " + h;
}

IrrepLabel make_label(int m, long a, const std::vector<long>& dynF) {
  IrrepLabel lab;
  lab.a = a;
  lab.dynF = dynF;
  lab.dim = (a + 1) * slm_dim(m, dynF);
  bool taken = false;
  for (const DictEntry& d : dictionary(m)) {
    if (!d.ok || d.dynF != dynF) continue;
    if (!taken) {
      lab.name = d.name;
      taken = true;
    } else {
      lab.degenerate = true;  // later dictionary entry collapses onto this one
    }
  }
  return lab;
}

std::vector<std::pair<IrrepLabel, long>> decompose(int m, const Character& c) {
  const SVec rho = rho_shifted(m);
  Character rem = c;
  for (const auto& [w, mult] : rem) {
    if (static_cast<int>(w.dyn.size()) != m - 1)
      throw std::invalid_argument("decompose: weight size does not match m");
    if (mult < 0) throw MathConsistencyError("decompose: negative multiplicity in input");
  }

  std::vector<std::pair<IrrepLabel, long>> out;
  while (!rem.empty()) {
    // dominant weight maximizing the rho pairing; ties broken lexicographically
    const SWeight* best = nullptr;
    Rational best_f;
    for (const auto& [w, mult] : rem) {
      if (mult == 0) continue;
      SVec sh = shifted_from_dyn(m, std::vector<long>(w.dyn.begin(), w.dyn.end()));
      // mean-zero correction: (v - mean, rho) with rho already mean-free-ish;
      // subtract total*mean(rho) so totals do not skew the comparison
      Rational f = Rational(w.a, 2) + Rational(dot(sh, rho));
      const long total = std::accumulate(sh.begin(), sh.end(), 0L);
      f -= Rational(total * (m - 1), 2);
      if (!best || f > best_f ||
          (f == best_f && std::tie(w.a, w.dyn) > std::tie(best->a, best->dyn))) {
        best = &w;
        best_f = f;
      }
    }
    if (!best) break;
    if (best->a < 0) throw MathConsistencyError("decompose: maximal weight not dominant");
    for (long d : best->dyn)
      if (d < 0) throw MathConsistencyError("decompose: maximal weight not dominant");

    const long mult = rem.at(*best);
    IrrepLabel lab = make_label(m, best->a, std::vector<long>(best->dyn.begin(), best->dyn.end()));
    Character ch = irrep_character(m, lab.a, lab.dynF);
    rem = char_add(rem, ch, -mult);
    for (const auto& [w, mm] : rem)
      if (mm < 0)
        throw MathConsistencyError("decompose: input is not a module character");
    out.emplace_back(std::move(lab), mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

bool is_weyl_symmetric(int m, const Character& c) {
  for (const auto& [w, mult] : c) {
    // sl(2) flip
    SWeight flip = w;
    flip.a = -flip.a;
    auto it = c.find(flip);
    if (it == c.end() || it->second != mult) return false;
    // sl(m): sort the shifted coordinates (dominant representative)
    SVec sh = shifted_from_dyn(m, std::vector<long>(w.dyn.begin(), w.dyn.end()));
    SVec dom = sh;
    std::sort(dom.begin(), dom.end(), std::greater<>());
    SWeight rep{w.a, dyn_from_shifted(dom)};
    it = c.find(rep);
    if (it == c.end() || it->second != mult) return false;
  }
  return true;
}

long long char_total(int, const Character& c) {
  long long t = 0;
  for (const auto& [w, m] : c) t += m;
  return t;
}

Character char_etilde(int n) {
  // s-torus weights of the 2n coordinates of the gl(2n) block: coordinates
  // 3..2n give E, the last two give H.
  const int m = 2 * n - 2;
  Character c;
  for (int i = 1; i <= m; ++i) {
    std::vector<long> dyn(m - 1, 0);
    if (i - 1 >= 1) dyn[i - 2] -= 1;
    if (i <= m - 1) dyn[i - 1] += 1;
    c[SWeight{0, dyn}] += 1;
  }
  c[SWeight{1, std::vector<long>(m - 1, 0)}] += 1;
  c[SWeight{-1, std::vector<long>(m - 1, 0)}] += 1;
  return c;
}

Character char_etilde_dual(int n) {
  Character c;
  for (const auto& [w, mult] : char_etilde(n)) {
    SWeight neg = w;
    neg.a = -neg.a;
    for (auto& d : neg.dyn) d = -d;
    c[neg] += mult;
  }
  return c;
}

Character char_sym2(const Character& c) {
  // unordered pairs with repetition, on the expanded weight multiset
  std::vector<SWeight> w;
  for (const auto& [x, m] : c)
    for (long i = 0; i < m; ++i) w.push_back(x);
  Character out;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i; j < w.size(); ++j) out[w[i] + w[j]] += 1;
  return out;
}

Character char_alt2(const Character& c) {
  std::vector<SWeight> w;
  for (const auto& [x, m] : c)
    for (long i = 0; i < m; ++i) w.push_back(x);
  Character out;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) out[w[i] + w[j]] += 1;
  return out;
}

Character char_ctilde(int n) {
  Character c = char_product(char_etilde(n), char_sym2(char_etilde_dual(n)));
  return char_add(c, char_etilde_dual(n), -1);
}

Character char_dtilde(int n) {
  Character c = char_product(char_etilde(n), char_alt2(char_etilde_dual(n)));
  return char_add(c, char_etilde_dual(n), -1);
}

}  // namespace qsp
