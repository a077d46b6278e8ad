#pragma once

#include "qspencer/characters.hpp"
#include "qspencer/roots.hpp"

namespace qsp {

// Harmonic-cohomology bookkeeping for the contact grading of sl(2n+2),
// following the crossed-node combinatorics: all computations run in the
// simple system {alpha_i} = {-delta_i}, where the grading element E
// evaluates as mu(E) = mu_1 + mu_2 on the e-coordinates and the nilradical
// roots are those with nonzero alpha_2 coefficient.
struct HasseEntry {
  WeylElement sigma;
  std::vector<ECoord> inversions;  // Phi_sigma, subset of the flipped positives
  ECoord sigma_theta;
  ECoord xi;                        // sigma(theta) - <Phi_sigma>
  int p = 0, q = 0;                 // contributes to H^{p,q}(g~)
  long omega1 = 0;                  // sl(2) fundamental-weight label
  std::vector<long> omega_slm;      // sl(2n) labels on delta_3..delta_l
  long long dim = 0;
};

long grading_eval(const ECoord& mu);  // mu(E) = mu_1 + mu_2

// W0(q): the length-q Weyl elements whose inversion set lies in the
// nilradical roots, with xi, bidegree, dominant labels and dimension filled.
std::vector<HasseEntry> hasse_diagram(int n, int q);

// Expected total dimension of H^{p,q}(g~): the sum of dim H^sigma over the
// entries of W0(q) placed at p.
long long kostant_dimension(const std::vector<HasseEntry>& entries, int p);

}  // namespace qsp
