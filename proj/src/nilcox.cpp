#include "dcoset/nilcox.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dcoset/errors.hpp"

namespace dcoset {

ADMorphism ADMorphism::zero(const CoxeterSystem& system, ParabolicSubset source, ParabolicSubset target) {
  return ADMorphism(system, source, target);
}

ADMorphism ADMorphism::basis(const DoubleCoset& p) {
  ADMorphism out(p.system(), p.right(), p.left());
  out.add_term(p, 1);
  return out;
}

ADMorphism ADMorphism::identity(const CoxeterSystem& system, ParabolicSubset frame) {
  return basis(identity_coset(system, frame));
}

std::int64_t ADMorphism::coefficient(const DoubleCoset& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void ADMorphism::add_term(const DoubleCoset& p, std::int64_t k) {
  if (p.right() != source_ || p.left() != target_)
    throw FrameMismatch("coset frames do not match the morphism's objects");
  std::int64_t& slot = terms_[p];
  slot += k;
  if (slot == 0) terms_.erase(p);
}

ADMorphism& ADMorphism::operator+=(const ADMorphism& other) {
  if (other.system_ != system_ || other.source_ != source_ || other.target_ != target_)
    throw FrameMismatch("cannot add morphisms between different objects");
  for (const auto& [p, k] : other.terms_) add_term(p, k);
  return *this;
}

ADMorphism operator*(std::int64_t k, const ADMorphism& f) {
  ADMorphism out = ADMorphism::zero(f.system_, f.source_, f.target_);
  if (k == 0) return out;
  for (const auto& [p, c] : f.terms_) out.add_term(p, k * c);
  return out;
}

ADMorphism d_compose(const DoubleCoset& p, const DoubleCoset& q) {
  require_frames_chain(p, q);
  if (!is_reduced_composition(p, q)) return ADMorphism::zero(p.system(), q.right(), p.left());
  return ADMorphism::basis(star_compose(p, q));
}

ADMorphism ad_compose(const ADMorphism& f, const ADMorphism& g) {
  if (f.system() != g.system()) throw SystemMismatch("morphisms from different systems");
  if (f.source() != g.target())
    throw FrameMismatch("cannot compose: source " + format_subset(f.source()) + " vs target " + format_subset(g.target()));
  ADMorphism out = ADMorphism::zero(f.system(), g.source(), f.target());
  for (const auto& [p, a] : f.terms())
    for (const auto& [q, b] : g.terms()) out += (a * b) * d_compose(p, q);
  return out;
}

namespace {

AtomicCoset generator_coset(const CoxeterSystem& system, ParabolicSubset source, int i) {
  if (system.cartan() == CartanType::I2) throw InvalidArgument("labeled generators exist only in types A and B");
  return detail::generator_at(system, source, i - detail::generator_base(system.cartan()));
}

// Target object of ∂_{word} 1_J, tracked even when the morphism vanishes.
ParabolicSubset word_target(const CoxeterSystem& system, ParabolicSubset source, std::span<const int> word) {
  ParabolicSubset cur = source;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = generator_coset(system, cur, *it).left();
  return cur;
}

}  // namespace

ADMorphism generator(const CoxeterSystem& system, ParabolicSubset source, int i) {
  return ADMorphism::basis(generator_coset(system, source, i).coset());
}

ADMorphism psi(const CoxeterSystem& system, ParabolicSubset source, std::span<const int> word) {
  ADMorphism f = ADMorphism::identity(system, source);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = ad_compose(generator(system, f.target(), *it), f);
  return f;
}

LabeledComposition composition_of(const CoxeterSystem& system, ParabolicSubset frame) {
  LabeledComposition out;
  if (system.cartan() == CartanType::A) {
    for (const auto& b : classes(system, frame).classes) out.parts.push_back(b.size());
  } else if (system.cartan() == CartanType::B) {
    SignedBlockStructure s = classes_b(system, frame);
    out.parts.push_back(s.central + 1);
    for (const auto& b : s.classes) out.parts.push_back(b.size());
  } else {
    throw InvalidArgument("compositions label objects only in types A and B");
  }
  return out;
}

ParabolicSubset frame_from_composition(const CoxeterSystem& system, const LabeledComposition& composition) {
  const auto& parts = composition.parts;
  if (std::any_of(parts.begin(), parts.end(), [](int n) { return n <= 0; }))
    throw InvalidArgument("composition parts must be positive");
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  ParabolicSubset out;
  if (system.cartan() == CartanType::A) {
    if (total != system.degree()) throw InvalidArgument("composition does not sum to n");
    int x = 1;
    for (int n : parts) {
      for (int o = 0; o + 1 < n; ++o) out = out.with(x + o);
      x += n;
    }
  } else if (system.cartan() == CartanType::B) {
    if (parts.empty() || total != system.rank() + 1) throw InvalidArgument("type B composition must sum to n + 1");
    for (int i = 0; i + 1 < parts[0]; ++i) out = out.with(i);
    int x = parts[0];
    for (std::size_t c = 1; c < parts.size(); ++c) {
      for (int o = 0; o + 1 < parts[c]; ++o) out = out.with(x + o);
      x += parts[c];
    }
  } else {
    throw InvalidArgument("compositions label objects only in types A and B");
  }
  return out;
}

std::string format_composition(const LabeledComposition& composition) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < composition.parts.size(); ++k) os << (k ? "," : "") << composition.parts[k];
  os << ')';
  return os.str();
}

RelationReport verify_relations_at(const CoxeterSystem& system, ParabolicSubset frame) {
  if (system.cartan() == CartanType::I2) throw InvalidArgument("relations are defined for types A and B");
  const bool type_b = system.cartan() == CartanType::B;
  const int base = detail::generator_base(system.cartan());
  RelationReport report;
  const int k = (system.all_simples() - frame).size();
  const std::string where = " at " + format_subset(frame);
  auto equal_nonzero = [&](std::vector<int> lhs, std::vector<int> rhs, const std::string& name) {
    ++report.checked;
    ADMorphism a = psi(system, frame, lhs);
    ADMorphism b = psi(system, frame, rhs);
    if (a.is_zero() || !(a == b)) report.failures.push_back(name + " [" + format_word(lhs) + "] = [" + format_word(rhs) + "]" + where);
  };
  for (int i = base; i < base + k; ++i) {
    ++report.checked;
    std::vector<int> twice{i, i};
    if (!psi(system, frame, twice).is_zero()) report.failures.push_back("nil relation at index " + std::to_string(i) + where);

    // Objects: ∂_i swaps the labels of strands i and i+1 (type B ∂_0 fixes them).
    ++report.checked;
    LabeledComposition expected = composition_of(system, frame);
    if (type_b) {
      if (i > 0) std::swap(expected.parts[i], expected.parts[i + 1]);
    } else {
      std::swap(expected.parts[i - 1], expected.parts[i]);
    }
    std::vector<int> once{i};
    if (composition_of(system, word_target(system, frame, once)) != expected)
      report.failures.push_back("generator " + std::to_string(i) + " has the wrong target" + where);
  }
  for (int i = base; i < base + k; ++i) {
    for (int j = i + 2; j < base + k; ++j) equal_nonzero({i, j}, {j, i}, "commutation");
    bool braid3_ok = i + 1 < base + k && !(type_b && i == 0);
    if (braid3_ok) equal_nonzero({i, i + 1, i}, {i + 1, i, i + 1}, "braid");
  }
  if (type_b && k >= 2) equal_nonzero({0, 1, 0, 1}, {1, 0, 1, 0}, "length-4 braid");
  return report;
}

RelationReport verify_relations(const CoxeterSystem& system) {
  RelationReport report;
  for (ParabolicSubset frame : all_subsets(system)) {
    RelationReport cell = verify_relations_at(system, frame);
    report.checked += cell.checked;
    report.failures.insert(report.failures.end(), cell.failures.begin(), cell.failures.end());
  }
  return report;
}

std::vector<DoubleCoset> ad_basis(const CoxeterSystem& system, ParabolicSubset source, std::size_t cap) {
  return enumerate_core_cosets(system, source, cap);
}

std::vector<DoubleCoset> reachable_basis(const CoxeterSystem& system, ParabolicSubset source) {
  std::set<DoubleCoset> seen{identity_coset(system, source)};
  std::vector<DoubleCoset> frontier(seen.begin(), seen.end());
  const int base = detail::generator_base(system.cartan());
  while (!frontier.empty()) {
    std::vector<DoubleCoset> next;
    for (const auto& p : frontier) {
      const int k = (system.all_simples() - p.left()).size();
      for (int i = base; i < base + k; ++i) {
        ADMorphism f = d_compose(generator_coset(system, p.left(), i).coset(), p);
        for (const auto& [q, c] : f.terms())
          if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  std::vector<DoubleCoset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const DoubleCoset& a, const DoubleCoset& b) {
    if (a.min().length() != b.min().length()) return a.min().length() < b.min().length();
    return a < b;
  });
  return out;
}

}  // namespace dcoset
