#pragma once

// Multistep expressions [[I0 < K1 > I1 < ... < Km > Im]] and their one-step
// form [I0 +s -t ...].

#include <string>
#include <variant>
#include <vector>

#include "dcoset/cosets.hpp"

namespace dcoset {

class MultistepExpression {
 public:
  /// Frames I0, K1, I1, ..., Km, Im. Each K_t must contain both neighbours.
  explicit MultistepExpression(std::vector<ParabolicSubset> frames);

  static MultistepExpression trivial(ParabolicSubset frame) { return MultistepExpression({frame}); }

  const std::vector<ParabolicSubset>& frames() const { return frames_; }
  ParabolicSubset start() const { return frames_.front(); }
  ParabolicSubset finish() const { return frames_.back(); }
  /// Number of up-down steps m.
  int steps() const { return static_cast<int>(frames_.size() / 2); }
  /// K_t and I_t for 1 <= t <= steps().
  ParabolicSubset upper(int t) const { return frames_[2 * t - 1]; }
  ParabolicSubset lower(int t) const { return frames_[2 * t]; }

  friend bool operator==(const MultistepExpression&, const MultistepExpression&) = default;

 private:
  std::vector<ParabolicSubset> frames_;
};

struct Step {
  bool add = true;
  int index = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

class OneStepExpression {
 public:
  /// Throws InvalidArgument when an addition repeats a present index or a
  /// removal drops an absent one.
  OneStepExpression(ParabolicSubset start, std::vector<Step> steps);

  ParabolicSubset start() const { return start_; }
  ParabolicSubset finish() const;
  const std::vector<Step>& steps() const { return steps_; }

  friend bool operator==(const OneStepExpression&, const OneStepExpression&) = default;

 private:
  ParabolicSubset start_;
  std::vector<Step> steps_;
};

using Expression = std::variant<MultistepExpression, OneStepExpression>;

/// Groups each maximal run of additions with the removals that follow it.
MultistepExpression to_multistep(const OneStepExpression& e);
/// Additions then removals per step, each ascending.
OneStepExpression to_onestep(const MultistepExpression& m);
MultistepExpression to_multistep(const Expression& e);

/// The (I0, Im)-coset with maximal element w_{K1} * ... * w_{Km}.
DoubleCoset evaluate(const CoxeterSystem& system, const MultistepExpression& m);
DoubleCoset evaluate(const CoxeterSystem& system, const Expression& e);

/// w_{K1} w_{I1}^{-1} w_{K2} ... w_{Km} as a group product.
Element expression_product(const CoxeterSystem& system, const MultistepExpression& m);
/// ℓ(K1) - ℓ(I1) + ℓ(K2) - ... + ℓ(Km).
int expected_length(const CoxeterSystem& system, const MultistepExpression& m);
bool is_reduced(const CoxeterSystem& system, const MultistepExpression& m);
bool is_reduced(const CoxeterSystem& system, const Expression& e);

MultistepExpression concatenate(const MultistepExpression& m, const MultistepExpression& n);
MultistepExpression reverse(const MultistepExpression& m);

/// Both reduced and expressing the same coset.
bool expressions_equivalent(const CoxeterSystem& system, const MultistepExpression& m, const MultistepExpression& n);

/// Accepts `[[{..} < {..} > {..}]]` or `[{..} +s -t]`.
Expression parse_expression(const std::string& text);
std::string format_expression(const MultistepExpression& m);
std::string format_expression(const OneStepExpression& e);
std::string format_expression(const Expression& e);

}  // namespace dcoset
