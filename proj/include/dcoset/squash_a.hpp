#pragma once

// Squashing of core cosets in type A: each block of strands bundled by the
// right frame J collapses to a single strand, giving a permutation of
// n - |J| letters. Atomic cosets become simple transpositions.

#include <set>
#include <span>
#include <vector>

#include "dcoset/atomic.hpp"

namespace dcoset {

/// An interval [first, last] of the underlying ordered set.
struct Block {
  int first = 0;
  int last = 0;

  int size() const { return last - first + 1; }
  bool contains(int x) const { return first <= x && x <= last; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Ordered contiguous classes C_1 < ... < C_k of {1..n} under j ~ j+1 for j in J.
struct BlockStructure {
  std::vector<Block> classes;

  int count() const { return static_cast<int>(classes.size()); }
  /// 0-based class index containing x.
  int class_of(int x) const;
};

/// A permutation in a smaller group of the same type.
using SquashedPermutation = Element;

BlockStructure classes(const CoxeterSystem& system, ParabolicSubset right);

/// Each J-class goes order-preservingly onto an I-class. Throws when |I| != |J|.
bool is_block_permutation(const Element& y, ParabolicSubset left, ParabolicSubset right);

/// The induced permutation of class indices, in S_{n-|J|}. Throws NotCore.
SquashedPermutation squash_coset(const DoubleCoset& p);

/// The core coset with right frame J squashing to sigma.
DoubleCoset unsquash(const CoxeterSystem& system, ParabolicSubset right, const SquashedPermutation& sigma);

/// a_i^J = [Js \ t, Js, J] for s the i-th element (1-based) of S \ J.
AtomicCoset atomic_generator(const CoxeterSystem& system, ParabolicSubset right, int i);

/// Lifts a word in the squashed generators to a chain of atomic cosets
/// ending at J. The rightmost letter acts first.
AtomicSequence lift_word(const CoxeterSystem& system, ParabolicSubset right, std::span<const int> word);

/// Inverse of lift_word: the generator index of each atomic relative to its right frame.
std::vector<int> index_word(std::span<const AtomicCoset> seq);

enum class BraidKind { braid3, braid4, comm };

/// Rewrites an atomic index word. Throws InvalidArgument on a pattern mismatch.
std::vector<int> apply_braid_move(std::span<const int> word, std::size_t pos, BraidKind kind);

/// Every word reachable from `word` by braid moves valid for the type.
std::set<std::vector<int>> braid_closure(CartanType type, std::span<const int> word);

/// The braid closure of the greedy atomic rex equals the set of all atomic rexes.
bool matsumoto_connected(const DoubleCoset& p);

/// Reduced words of an element as index lists (exhaustive, small groups only).
std::set<std::vector<int>> all_reduced_words(const Element& w);

namespace detail {
AtomicCoset generator_at(const CoxeterSystem& system, ParabolicSubset right, int position);
int generator_base(CartanType type);
bool braid_closure_matches(const DoubleCoset& p);
}  // namespace detail

}  // namespace dcoset
