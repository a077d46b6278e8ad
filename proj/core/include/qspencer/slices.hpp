#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "qspencer/algebra.hpp"

namespace qsp {

enum class Flavor { absolute, relative };

using Character = std::map<SWeight, long>;

struct SliceElem {
  long coeff = 0;       // index into the degree p-1 basis
  uint32_t mask = 0;    // q-subset of the base space, bit t = basis vector t
  SWeight wt;
};

// Basis-indexed description of C^{p,q}(g~) (absolute, base = V) or
// C^{p,q}(g~,W) (relative, base = W).  Since the V basis lists the W basis
// first and rho last, a relative slice is literally the rho-free prefix
// pattern of the absolute one.  Empty outside 0 <= p <= 2, 0 <= q <= base.
class Slice {
 public:
  Slice(const GradedAlgebra& a, int p, int q, Flavor f);

  const GradedAlgebra& algebra() const { return *a_; }
  int p() const { return p_; }
  int q() const { return q_; }
  Flavor flavor() const { return flavor_; }
  long base_dim() const;
  long coeff_dim() const;
  long dim() const { return static_cast<long>(elems_.size()); }
  const std::vector<SliceElem>& elements() const { return elems_; }
  long index_of(long coeff, uint32_t mask) const;  // -1 when absent
  const std::map<SWeight, std::vector<long>>& blocks() const { return blocks_; }
  Character character() const;

 private:
  const GradedAlgebra* a_;
  int p_, q_;
  Flavor flavor_;
  std::vector<SliceElem> elems_;
  std::map<SWeight, std::vector<long>> blocks_;
  std::unordered_map<uint64_t, long> lookup_;
};

// Sparse columns of a linear map between slices: col[j] lists (row, value).
using SparseCol = std::vector<std::pair<long, Rational>>;
using SparseCols = std::vector<SparseCol>;

// Spencer differential C^{p,q} -> C^{p-1,q+1}, same flavor, with the sign
// convention d c(w_1..w_{q+1}) = sum_i (-1)^i [c(.. w_i hat ..), w_i].
SparseCols differential_columns(const Slice& src, const Slice& tgt);

// Action of X in g^0 on a slice; for relative slices X must preserve W.
SparseCols action_columns(const Slice& s, const ExactMatrix& X);

Vec apply_columns(const SparseCols& cols, long tgt_dim, const Vec& x);
SparseCols compose_columns(const SparseCols& first, const SparseCols& then);
SparseCols add_columns(const SparseCols& a, const SparseCols& b, const Rational& sb = 1);
SparseCols scale_columns(const SparseCols& a, const Rational& s);

// Weight-blocked dense form of a weight-preserving map.  Blocks are keyed by
// the source block weight; rows follow the target block of the same weight.
struct BlockedMap {
  const Slice* src = nullptr;
  const Slice* tgt = nullptr;
  std::map<SWeight, ExactMatrix> blocks;

  long total_rank() const;     // sum of block ranks, computed in parallel
  ExactMatrix dense() const;   // full matrix, rows/cols in slice order
};

// Validates that cols preserves torus weights and groups it into blocks.
BlockedMap group_by_weight(const Slice& src, const Slice& tgt, const SparseCols& cols);

BlockedMap blocked_differential(const Slice& src, const Slice& tgt);

// Slice cache so that differentials and cohomology spaces share bases.
class SpencerContext {
 public:
  explicit SpencerContext(const GradedAlgebra& a) : a_(&a) {}
  const GradedAlgebra& algebra() const { return *a_; }
  const Slice& slice(int p, int q, Flavor f);

 private:
  const GradedAlgebra* a_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<Slice>> cache_;
};

// Sign of sorting a tuple of distinct entries, counted by inversions.
int sort_sign(std::vector<int> tuple);

}  // namespace qsp
