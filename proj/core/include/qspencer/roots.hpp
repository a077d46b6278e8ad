#pragma once

#include <vector>

#include "qspencer/exact.hpp"

namespace qsp {

// Weights and roots live in e-coordinates Z^{l+1}, considered modulo the
// all-ones vector.  Roots of A_l are e_i - e_j.
using ECoord = std::vector<long>;

// sigma(e_i) = e_{perm[i]}, 0-based.
using Perm = std::vector<int>;

struct WeylElement {
  Perm perm;
  std::vector<int> word;  // reduced word, 1-based simple-reflection indices
};

// Type A_l system.  With flipped = true the simple system is {-delta_i},
// i.e. alpha_i = e_{i+1} - e_i, and positivity is reversed accordingly.
// The appendix computations run entirely in the flipped system.
struct RootSystem {
  int l = 0;
  bool flipped = false;

  int dim() const { return l + 1; }
  ECoord simple_root(int i) const;           // 1-based i
  std::vector<ECoord> positive_roots() const;
  ECoord highest_root() const;
  bool is_positive(const ECoord& root) const;
};

RootSystem build_type_a(int l, bool flipped = false);  // throws if l < 2

// <mu, alpha> = mu_i - mu_j for alpha = e_i - e_j (self-dual normalization).
long pairing(const ECoord& mu, const ECoord& root);

// Coefficients of a root-lattice vector on the system's simple roots.
std::vector<long> simple_coefficients(const RootSystem& rs, const ECoord& v);

ECoord reflect(const RootSystem& rs, int i, const ECoord& mu);  // sigma_i(mu)

ECoord weyl_apply(const WeylElement& w, const ECoord& mu);

WeylElement weyl_identity(int l);
WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word);

long weyl_length(const RootSystem& rs, const Perm& p);

// Phi_sigma = Phi+ cap sigma(Phi-); its size equals the length of sigma.
std::vector<ECoord> inversion_set(const RootSystem& rs, const WeylElement& w);

// All Weyl elements of length exactly q, deduplicated on permutations and
// sorted by permutation.  Words record one reduced expression.
std::vector<WeylElement> elements_of_length(const RootSystem& rs, int q);

bool equal_mod_ones(const ECoord& a, const ECoord& b);

}  // namespace qsp
