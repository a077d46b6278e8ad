#pragma once

#include <vector>

#include "qspencer/matrix.hpp"
#include "qspencer/sweight.hpp"

namespace qsp {

// Complexified graded algebra sl(2n+2) with the depth-one contact grading:
// deg(sum c_i delta_i) = c_2 on roots, signs fixed so that g^{-1} is the
// lower-left 2n x 2 block.  All structure constants are rational and come
// from matrix commutators of elementary matrices.
//
// The degree -1 basis is ordered so that W is a prefix:
//   [0, 4n-4)          the EH block, e_{j,i} for j = 3..2n, i = 1..2
//   4n-4 .. 4n-2       the S^2H triple e_{2n+1,1}-e_{2n+2,2}, e_{2n+1,2}, e_{2n+2,1}
//   4n-1               rho = e_{2n+1,1}+e_{2n+2,2}, spanning W-perp
class GradedAlgebra {
 public:
  explicit GradedAlgebra(int n);  // throws std::invalid_argument for n < 2

  int n() const { return n_; }
  int matrix_size() const { return 2 * n_ + 2; }
  int l() const { return 2 * n_ + 1; }
  int m() const { return 2 * n_ - 2; }  // rank of the sl factor of s

  long dim(int degree) const;  // degree in {-1, 0, 1}
  long total_dim() const { return dim(-1) + dim(0) + dim(1); }
  long dim_v() const { return 4L * n_; }
  long w_dim() const { return 4L * n_ - 1; }
  long u_dim() const { return 4L * n_ - 4; }
  long rho_index() const { return 4L * n_ - 1; }

  const ExactMatrix& basis_elem(int degree, long i) const;
  const SWeight& weight(int degree, long i) const;
  const ExactMatrix& rho() const { return basis_elem(-1, rho_index()); }

  ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y) const;

  // Expansion of a degree-homogeneous matrix over the degree basis; throws
  // MathConsistencyError when x is not in that graded piece.
  Vec expand(int degree, const ExactMatrix& x) const;

  // Precomputed bracket expansions used by the cochain complexes.
  const std::vector<std::pair<long, Rational>>& bracket_g0_v(long i, long t) const;
  const std::vector<std::pair<long, Rational>>& bracket_g1_v(long i, long t) const;

  struct SubspaceTable {
    std::vector<long> u_indices, uperp_indices, w_indices, v_indices;
    long wperp_index = 0;
    long eh_dim = 0, s2h_dim = 3;
  };
  SubspaceTable subspaces() const;

  struct LeviGenerators {
    ExactMatrix e, f, h;               // the diagonal sl(2) triple
    std::vector<ExactMatrix> slm;      // E_{delta_i}, E_{-delta_i}, H_{delta_i}, i = 3..2n-1
    std::vector<ExactMatrix> all;      // e, f, h followed by slm
  };
  const LeviGenerators& levi() const { return levi_; }
  long levi_dim() const { return static_cast<long>(m()) * m() - 1 + 3; }

  // Torus of s: the sl(2) coroot followed by H_{delta_3}..H_{delta_{2n-1}}.
  const std::vector<ExactMatrix>& s_torus() const { return torus_; }

  // Basis of {X in g^0 : [X, W] subset W} as coordinate vectors over the
  // degree-0 basis.
  std::vector<Vec> stabilizer_of_w() const;
  static long stabilizer_dim_formula(int n) {
    return 4L * (n - 1) * (n - 1) + 4L * (n - 1) + 4;
  }

 private:
  void build_basis();
  void build_tables();
  SWeight compute_weight(const ExactMatrix& x) const;

  int n_;
  std::vector<ExactMatrix> basis_v_, basis_0_, basis_1_;
  std::vector<SWeight> wt_v_, wt_0_, wt_1_;
  std::vector<std::vector<std::pair<long, Rational>>> tab_g0_v_, tab_g1_v_;
  LeviGenerators levi_;
  std::vector<ExactMatrix> torus_;
};

}  // namespace qsp
