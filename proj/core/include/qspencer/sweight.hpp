#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsp {

// Weight for the torus of s = sl(2n-2) + sl(2): `a` is the eigenvalue of the
// diagonal sl(2) coroot, `dyn` the pairings with delta_3 .. delta_{2n-1}
// (which determine the sl(2n-2) weight).
struct SWeight {
  long a = 0;
  std::vector<long> dyn;

  friend auto operator<=>(const SWeight&, const SWeight&) = default;

  SWeight operator+(const SWeight& o) const {
    if (dyn.size() != o.dyn.size())
      throw std::invalid_argument("SWeight: size mismatch");
    SWeight r = *this;
    r.a += o.a;
    for (size_t i = 0; i < dyn.size(); ++i) r.dyn[i] += o.dyn[i];
    return r;
  }
  SWeight operator-(const SWeight& o) const {
    if (dyn.size() != o.dyn.size())
      throw std::invalid_argument("SWeight: size mismatch");
    SWeight r = *this;
    r.a -= o.a;
    for (size_t i = 0; i < dyn.size(); ++i) r.dyn[i] -= o.dyn[i];
    return r;
  }

  std::string str() const {
    std::string s = "(" + std::to_string(a) + ";";
    for (size_t i = 0; i < dyn.size(); ++i)
      s += (i ? "," : "") + std::to_string(dyn[i]);
    return s + ")";
  }
};

}  // namespace qsp
