#pragma once

#include <string>

#include "qspencer/slices.hpp"

namespace qsp {

// Characters of s = sl(m) + sl(2), m = 2n-2, as finitely supported integer
// functions on SWeight.  decompose() peels irreducibles greedily from the
// dominant end, with irreducible characters produced by Freudenthal's
// multiplicity formula on the sl(m) factor.

Character char_add(const Character& a, const Character& b, long scale = 1);
Character char_product(const Character& a, const Character& b);
Character sl2_char(long a, int m);  // S^a H with a trivial sl(m) part

// Irreducible sl(m)-module dimension by the Weyl formula; dynF are the
// fundamental-weight labels (size m-1).
long long slm_dim(int m, const std::vector<long>& dynF);

// (lambda, lambda + 2 rho) for the form dual to the trace form; this is the
// eigenvalue of the trace-form Casimir on the irreducible with h.w. dynF.
Rational casimir_slm_eigenvalue(int m, const std::vector<long>& dynF);

// Full character of the irreducible s-module with sl(2) label a and sl(m)
// highest weight dynF.
Character irrep_character(int m, long a, const std::vector<long>& dynF);

struct IrrepLabel {
  long a = 0;                 // S^a H factor
  std::vector<long> dynF;     // sl(m) highest weight
  std::string name;           // dictionary name of the sl(m) factor
  bool degenerate = false;    // dictionary collision at small m
  long long dim = 0;          // dim of the full s-module
  std::string display() const;

  friend bool operator==(const IrrepLabel& x, const IrrepLabel& y) {
    return x.a == y.a && x.dynF == y.dynF;
  }
  friend bool operator<(const IrrepLabel& x, const IrrepLabel& y) {
    return std::tie(x.a, x.dynF) < std::tie(y.a, y.dynF);
  }
};

// Triv, E, E*, L2E* (Lambda^2 E*), L3E*, S2E*, Ad, C, D, V; first dictionary
// entry wins on collisions (degenerate flag set), unnamed weights keep their
// coordinates with an empty name.
IrrepLabel make_label(int m, long a, const std::vector<long>& dynF);

// Greedy isotypic decomposition; throws MathConsistencyError when the input
// is not the character of a module (a multiplicity goes negative).
std::vector<std::pair<IrrepLabel, long>> decompose(int m, const Character& c);

bool is_weyl_symmetric(int m, const Character& c);
long long char_total(int m, const Character& c);  // sum of multiplicities

// Symmetric and exterior squares of a character.
Character char_sym2(const Character& c);
Character char_alt2(const Character& c);

// s-characters of the auxiliary gl(2n) modules used by the isotypic tables:
// the standard module Etilde = E + H, its dual, and the contraction kernels
// Ctilde = ker(Etilde (x) S^2 Etilde* -> Etilde*),
// Dtilde = ker(Etilde (x) L^2 Etilde* -> Etilde*).
Character char_etilde(int n);
Character char_etilde_dual(int n);
Character char_ctilde(int n);
Character char_dtilde(int n);

}  // namespace qsp
