#pragma once

// The nilCoxeter algebroid D over Z, with basis symbols ∂_p for double cosets:
// ∂_p ∘ ∂_q = ∂_{p*q} when p*q is reduced and 0 otherwise. The atomic
// subcategory AD is generated by ∂_a for atomic a.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dcoset/squash_b.hpp"

namespace dcoset {

/// A Z-linear combination of ∂_p over (target, source)-cosets.
class ADMorphism {
 public:
  static ADMorphism zero(const CoxeterSystem& system, ParabolicSubset source, ParabolicSubset target);
  static ADMorphism basis(const DoubleCoset& p);
  static ADMorphism identity(const CoxeterSystem& system, ParabolicSubset frame);

  const CoxeterSystem& system() const { return system_; }
  ParabolicSubset source() const { return source_; }
  ParabolicSubset target() const { return target_; }
  const std::map<DoubleCoset, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const DoubleCoset& p) const;
  bool is_zero() const { return terms_.empty(); }

  ADMorphism& operator+=(const ADMorphism& other);
  friend ADMorphism operator+(ADMorphism a, const ADMorphism& b) { return a += b; }
  friend ADMorphism operator*(std::int64_t k, const ADMorphism& f);

  friend bool operator==(const ADMorphism&, const ADMorphism&) = default;

 private:
  ADMorphism(const CoxeterSystem& system, ParabolicSubset source, ParabolicSubset target)
      : system_(system), source_(source), target_(target) {}
  void add_term(const DoubleCoset& p, std::int64_t k);

  CoxeterSystem system_;
  ParabolicSubset source_;
  ParabolicSubset target_;
  std::map<DoubleCoset, std::int64_t> terms_;
};

/// ∂_p ∘ ∂_q.
ADMorphism d_compose(const DoubleCoset& p, const DoubleCoset& q);
/// Bilinear extension; g acts first. Throws FrameMismatch unless f.source() == g.target().
ADMorphism ad_compose(const ADMorphism& f, const ADMorphism& g);

/// ∂ of the atomic generator a_i^J (1-based in type A, 0-based in type B).
ADMorphism generator(const CoxeterSystem& system, ParabolicSubset source, int i);

/// ∂_{i_1} ... ∂_{i_d} 1_J, the rightmost generator applied first.
ADMorphism psi(const CoxeterSystem& system, ParabolicSubset source, std::span<const int> word);

/// Object labels: block sizes of the frame. In type B the first part is the
/// number of non-negative points in the central class, so parts sum to n + 1.
struct LabeledComposition {
  std::vector<int> parts;

  friend bool operator==(const LabeledComposition&, const LabeledComposition&) = default;
};

LabeledComposition composition_of(const CoxeterSystem& system, ParabolicSubset frame);
ParabolicSubset frame_from_composition(const CoxeterSystem& system, const LabeledComposition& composition);
std::string format_composition(const LabeledComposition& composition);

struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks the braid, commutation and nil relations of the labeled
/// nilCoxeter algebroid at every object of the system.
RelationReport verify_relations(const CoxeterSystem& system);
RelationReport verify_relations_at(const CoxeterSystem& system, ParabolicSubset frame);

/// Core cosets with right frame J: a basis of Hom out of J in AD.
std::vector<DoubleCoset> ad_basis(const CoxeterSystem& system, ParabolicSubset source, std::size_t cap = 10000);

/// Basis symbols reached by nonzero products of generators starting at J.
std::vector<DoubleCoset> reachable_basis(const CoxeterSystem& system, ParabolicSubset source);

}  // namespace dcoset
