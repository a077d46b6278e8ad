#pragma once

#include <optional>
#include <tuple>

#include "qspencer/cohomology.hpp"
#include "qspencer/quaternions.hpp"

namespace qsp {

// Antisymmetric structure constants of a 2-step nilpotent bracket
// Lambda^2 U -> Uperp on the quaternionic Heisenberg model:
// [u_i, u_j] = sum_alpha c^alpha_{ij} z_alpha with 1-based i < j and
// alpha in {1,2,3}.  Jacobi is automatic.
class BracketSpec {
 public:
  explicit BracketSpec(int n);
  int n() const { return n_; }
  long u_dim() const { return 4L * (n_ - 1); }

  void set(int i, int j, int alpha, const Rational& v);
  Rational get(int i, int j, int alpha) const;  // antisymmetric in i, j
  const std::map<std::tuple<int, int, int>, Rational>& entries() const { return e_; }

  friend bool operator==(const BracketSpec& a, const BracketSpec& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  void check(int i, int j, int alpha) const;
  int n_;
  std::map<std::tuple<int, int, int>, Rational> e_;  // keys with i < j, value != 0
};

// [u, v] = Im(sum conj(u_i) v_i) on the admissible-frame basis of H^{n-1}.
BracketSpec standard_contact_bracket(int n);

// L_t = l0 + t l, entrywise.
BracketSpec deformation_family(const BracketSpec& l0, const BracketSpec& l,
                               const Rational& t);

// JSON document {"n": int, "entries": [{"i","j","alpha","value"}...]};
// unlisted entries are zero, duplicate keys are rejected.
BracketSpec bracket_from_json(const std::string& text);
std::string bracket_to_json(const BracketSpec& b);

// Flat coordinates: index (alpha-1)*npairs + lexicographic pair index.
long bracket_coord_dim(int n);
Vec bracket_coords(const BracketSpec& b);
BracketSpec bracket_from_coords(int n, const Vec& v);

enum class IsotypicBlock { l2e, l2e_s2h, s2e_s2h, l2e_s4h };

struct ObstructionReport {
  bool vanishes = false;
  bool nonzero_l2e = false;
  bool nonzero_l2e_s2h = false;
  bool nonzero_s2e_s2h = false;
  bool nonzero_l2e_s4h = false;
  std::optional<GaussVec> certificate;  // d(certificate) = embedded cochain
};

// Evaluates the first-order obstruction: embeds a bracket as a cochain in
// C^{0,2}(g~,W), tests membership in B^{0,2}(g~,W) block by block, and splits
// the embedded subspace Uperp (x) L^2 U* into its four isotypic pieces with
// exact Casimir spectral projectors.
class R1Engine {
 public:
  explicit R1Engine(SpencerContext& ctx);

  int n() const { return n_; }
  const Slice& cochain_slice() const { return *c02_; }

  // Complexification of the real bracket as a C^{0,2}(g~,W) vector.
  GaussVec embed(const BracketSpec& b) const;

  ObstructionReport r1_class(const BracketSpec& b) const;

  // Rational projector on bracket coordinates cutting out one isotypic block.
  const ExactMatrix& bracket_projector(IsotypicBlock which) const;

  // Torus weights present in the embedded subspace.
  std::vector<SWeight> embedded_weights() const;

 private:
  Vec to_x(const BracketSpec& b) const;  // bracket -> flat coordinates
  ExactMatrix pull_back(const ExactMatrix& op_on_x) const;  // T^{-1} op T

  SpencerContext* ctx_;
  int n_ = 0;
  const Slice* c02_ = nullptr;
  const Slice* c11_ = nullptr;
  std::vector<long> x_idx_;           // slice indices of Uperp (x) L^2 U*
  ExactMatrix t_re_, t_im_;           // embedding on x coordinates, k x k
  std::unique_ptr<LinearSolver> t_solver_;  // doubled real system for T
  std::map<SWeight, ExactMatrix> boundary_blocks_;
  std::map<SWeight, std::unique_ptr<LinearSolver>> boundary_solvers_;
  ExactMatrix proj_[4];               // projectors on bracket coordinates
};

}  // namespace qsp
