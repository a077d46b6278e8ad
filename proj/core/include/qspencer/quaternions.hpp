#pragma once

#include <vector>

#include "qspencer/algebra.hpp"

namespace qsp {

struct Quaternion {
  Rational r, i, j, k;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion ui() { return {0, 1, 0, 0}; }
  static Quaternion uj() { return {0, 0, 1, 0}; }
  static Quaternion uk() { return {0, 0, 0, 1}; }

  Quaternion conj() const { return {r, -i, -j, -k}; }
  Quaternion operator+(const Quaternion& o) const { return {r + o.r, i + o.i, j + o.j, k + o.k}; }
  Quaternion operator-(const Quaternion& o) const { return {r - o.r, i - o.i, j - o.j, k - o.k}; }
  Quaternion operator*(const Quaternion& o) const {
    return {r * o.r - i * o.i - j * o.j - k * o.k,
            r * o.i + i * o.r + j * o.k - k * o.j,
            r * o.j - i * o.k + j * o.r + k * o.i,
            r * o.k + i * o.j - j * o.i + k * o.r};
  }
  Quaternion scale(const Rational& s) const { return {r * s, i * s, j * s, k * s}; }
  bool is_zero() const { return r.is_zero() && i.is_zero() && j.is_zero() && k.is_zero(); }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

struct GaussianRational {
  Rational re, im;
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// A vector with entries in Q(i), stored as two rational vectors.
struct GaussVec {
  Vec re, im;
  explicit GaussVec(long dim = 0) : re(dim), im(dim) {}
  long size() const { return static_cast<long>(re.size()); }
  bool is_zero() const;
};

// Identification of the real quaternionic column space H^n with the
// complexified degree -1 piece of the graded algebra.  The quaternion
// h = z + w j in slot s (0-based) maps to the 2x2 block
//   [ z  w ; -conj(w)  conj(z) ]
// at rows (2s+3, 2s+4), columns (1, 2), so that rho is the complexification
// of the real vector (0,..,0,1).
//
// The real basis of H^n used throughout is the standard admissible frame:
// per slot the four vectors (I_1 1, I_2 1, I_3 1, 1) = (-i, -j, -k, 1), with
// I_alpha = -R_{i,j,k}.  Im(H) directions carry the (i, j, k) basis.
class RealForm {
 public:
  explicit RealForm(const GradedAlgebra& a) : a_(&a) {}

  static Quaternion real_basis_unit(int unit);  // 0..3 -> -i, -j, -k, 1
  static Quaternion imh_basis(int alpha);       // 1..3 -> i, j, k

  long real_dim() const { return 4L * a_->n(); }

  // Coordinates over the degree -1 basis of the complexified real vector
  // q placed in slot s.
  GaussVec psi(int slot, const Quaternion& q) const;
  GaussVec psi_basis(long real_index) const;  // real_index = 4*slot + unit
  GaussVec psi_imh(int alpha) const;          // z_alpha in the last slot

  // Inverse on basis vectors: degree -1 basis index -> coefficients over the
  // real basis.
  std::vector<std::pair<long, GaussianRational>> psi_inverse(long v_index) const;

  // Pulls a complex endomorphism of V (given by its Gaussian matrix over the
  // degree -1 basis) back to a real matrix on the real basis; throws when the
  // result is not real.
  ExactMatrix pull_back_endo(const std::vector<GaussVec>& images_of_real_basis) const;

  // ad([psi1(p at slot a), psi(h at slot b)]) restricted to V, as a real
  // matrix on the real basis of H^n.  psi1 places a quaternion in the
  // degree +1 block (rows 1..2, the transposed slot layout).
  ExactMatrix dual_action_bracket(int slot_a, const Quaternion& p,
                                  int slot_b, const Quaternion& h) const;

  // The closed prolongation-action formula
  //   v*(v) Id + v (x) v* - sum_alpha [ v*(I_alpha v) I_alpha
  //                                     + I_alpha v (x) (v* o I_alpha) ]
  // with v* the functional x -> -Re(p x_a), v = h in slot b.
  ExactMatrix dual_action_formula(int slot_a, const Quaternion& p,
                                  int slot_b, const Quaternion& h) const;

 private:
  const GradedAlgebra* a_;
};

}  // namespace qsp
