#pragma once

// Squashing in type B. The underlying set is {-n..n}; the class C_0 of 0 is
// symmetric and every other class is sign-pure, with C_{-c} = -C_c.

#include <span>
#include <vector>

#include "dcoset/squash_a.hpp"

namespace dcoset {

struct SignedBlockStructure {
  /// C_0 = {-central..central}.
  int central = 0;
  /// C_1 < ... < C_k, all positive.
  std::vector<Block> classes;

  int count() const { return static_cast<int>(classes.size()); }
  /// Signed 1-based class index of x; 0 for the central class.
  int class_of(int x) const;
};

SignedBlockStructure classes_b(const CoxeterSystem& system, ParabolicSubset right);

bool is_block_permutation_b(const Element& y, ParabolicSubset left, ParabolicSubset right);

/// The induced signed permutation of class indices, in B_{n-|J|}. Throws NotCore.
SquashedPermutation squash_coset_b(const DoubleCoset& p);

DoubleCoset unsquash_b(const CoxeterSystem& system, ParabolicSubset right, const SquashedPermutation& sigma);

/// a_i^J for s the i-th element (0-based) of S \ J.
AtomicCoset atomic_generator_b(const CoxeterSystem& system, ParabolicSubset right, int i);

/// Type B moves: braid4 swaps (0,1,0,1) and (1,0,1,0); braid3 needs both letters >= 1.
std::vector<int> apply_braid_move_b(std::span<const int> word, std::size_t pos, BraidKind kind);

bool matsumoto_connected_b(const DoubleCoset& p);

}  // namespace dcoset
