#pragma once

// Parabolic double cosets W_I w W_J, stored by their frames and minimal element.

#include <cstddef>
#include <functional>
#include <vector>

#include "dcoset/coxeter.hpp"

namespace dcoset {

/// Longest element w_I of the parabolic subgroup W_I.
Element longest_element(const CoxeterSystem& system, ParabolicSubset subset);
int parabolic_length(const CoxeterSystem& system, ParabolicSubset subset);

/// An (I,J)-coset W_I p W_J. The stored representative is always the
/// minimal element: no left descent in I, no right descent in J.
class DoubleCoset {
 public:
  /// Throws InvalidArgument when `min` is not minimal in its coset.
  DoubleCoset(ParabolicSubset left, Element min, ParabolicSubset right);

  const CoxeterSystem& system() const { return min_.system(); }
  ParabolicSubset left() const { return left_; }
  ParabolicSubset right() const { return right_; }
  const Element& min() const { return min_; }

  friend bool operator==(const DoubleCoset&, const DoubleCoset&) = default;
  friend auto operator<=>(const DoubleCoset&, const DoubleCoset&) = default;

 private:
  ParabolicSubset left_;
  Element min_;
  ParabolicSubset right_;
};

/// The identity (I,I)-coset W_I.
DoubleCoset identity_coset(const CoxeterSystem& system, ParabolicSubset frame);

/// Canonicalizes W_I w W_J by stripping descents (smallest index first).
DoubleCoset coset_of(ParabolicSubset left, const Element& w, ParabolicSubset right);

bool contains(const DoubleCoset& p, const Element& w);

/// w_I * min * w_J.
Element max_elem(const DoubleCoset& p);

/// I ∩ p J p^{-1} and p^{-1} I p ∩ J, with p the minimal element.
ParabolicSubset left_redundancy(const DoubleCoset& p);
ParabolicSubset right_redundancy(const DoubleCoset& p);

/// p J p^{-1} = I as sets of simple reflections. In builds without NDEBUG the
/// length criterion is evaluated as well and a disagreement throws.
bool is_core(const DoubleCoset& p);
/// max = w_I . min = min . w_J, both length-additive.
bool is_core_by_length(const DoubleCoset& p);

/// The (leftred, rightred)-coset with the same minimal element.
DoubleCoset core(const DoubleCoset& p);

/// (I,K)-coset whose maximal element is max(p) * max(q).
DoubleCoset star_compose(const DoubleCoset& p, const DoubleCoset& q);
bool is_reduced_composition(const DoubleCoset& p, const DoubleCoset& q);

DoubleCoset invert(const DoubleCoset& p);

/// Every (I,J)-coset, ordered by (length of min, min).
std::vector<DoubleCoset> enumerate_cosets(const CoxeterSystem& system, ParabolicSubset left, ParabolicSubset right,
                                          std::size_t cap = 10000);

/// Every core coset with right frame J, over all left frames I.
std::vector<DoubleCoset> enumerate_core_cosets(const CoxeterSystem& system, ParabolicSubset right,
                                               std::size_t cap = 10000);

/// Every parabolic subset of the system, ascending by bitmask.
std::vector<ParabolicSubset> all_subsets(const CoxeterSystem& system);

std::string format_subset(ParabolicSubset subset);
ParabolicSubset parse_subset(const std::string& text);

void require_frames_chain(const DoubleCoset& p, const DoubleCoset& q);

}  // namespace dcoset

template <>
struct std::hash<dcoset::DoubleCoset> {
  std::size_t operator()(const dcoset::DoubleCoset& p) const noexcept;
};
