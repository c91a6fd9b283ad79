#pragma once

// Atomic cosets [I + s - t] and atomic reduced expressions for core cosets.

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "dcoset/expressions.hpp"

namespace dcoset {

/// The (M \ s, M \ t)-coset containing w_M, where t = w_M s w_M.
class AtomicCoset {
 public:
  const DoubleCoset& coset() const { return coset_; }
  ParabolicSubset left() const { return coset_.left(); }
  ParabolicSubset middle() const { return middle_; }
  ParabolicSubset right() const { return coset_.right(); }
  int added() const { return added_; }
  int removed() const { return removed_; }

  friend bool operator==(const AtomicCoset&, const AtomicCoset&) = default;
  friend auto operator<=>(const AtomicCoset&, const AtomicCoset&) = default;

 private:
  friend AtomicCoset atomic_from(const CoxeterSystem&, ParabolicSubset, int);
  AtomicCoset(DoubleCoset coset, ParabolicSubset middle, int added, int removed)
      : coset_(std::move(coset)), middle_(middle), added_(added), removed_(removed) {}

  DoubleCoset coset_;
  ParabolicSubset middle_;
  int added_;
  int removed_;
};

using AtomicSequence = std::vector<AtomicCoset>;

/// Throws InvalidArgument when s is not in M.
AtomicCoset atomic_from(const CoxeterSystem& system, ParabolicSubset middle, int added);

bool is_atomic(const DoubleCoset& p);

/// Greedy atomic reduced expression: repeatedly add the smallest
/// s in leftdes(max) \ I and remove t = w_{Is} s w_{Is}. Throws NotCore.
AtomicSequence atomic_rex_of_core(const DoubleCoset& p);

/// Every atomic reduced expression of a core coset, in lexicographic order
/// of the added indices. Throws NotCore.
std::vector<AtomicSequence> all_atomic_rexes(const DoubleCoset& p);

/// [start + s1 - t1 + s2 - t2 ...].
OneStepExpression atomic_expression(ParabolicSubset start, std::span<const AtomicCoset> seq);

/// [[I > K]] o (greedy atomic rex of the core) o [[L < J]].
MultistepExpression factor_through_core(const DoubleCoset& p);

struct Composite {
  DoubleCoset coset;
  bool reduced;
};

/// Star composition of a chain of atomic cosets starting at `start`.
Composite compose_atomics(const CoxeterSystem& system, ParabolicSubset start, std::span<const AtomicCoset> seq);

/// Every atomic coset with the given right frame.
std::vector<AtomicCoset> atomics_ending_at(const CoxeterSystem& system, ParabolicSubset right);

/// Cosets reachable from the identity (J,J)-coset by star-composing atomic
/// cosets on the left, at most `max_steps` times. A bounded search, not a
/// membership decision procedure.
std::set<DoubleCoset> atomic_closure(const CoxeterSystem& system, ParabolicSubset right, int max_steps);

}  // namespace dcoset
