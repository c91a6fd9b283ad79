#include "dcoset/cosets.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "dcoset/errors.hpp"

namespace dcoset {

namespace {

void require_valid(const CoxeterSystem& system, ParabolicSubset subset) {
  if (!system.valid_subset(subset))
    throw InvalidArgument("subset " + format_subset(subset) + " is not a set of simples of " + system.name());
}

bool ordered_before(const DoubleCoset& a, const DoubleCoset& b) {
  int la = a.min().length(), lb = b.min().length();
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace

Element longest_element(const CoxeterSystem& system, ParabolicSubset subset) {
  require_valid(system, subset);
  Element w = system.identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : subset.indices()) {
      if (!is_left_descent(w, i)) {
        w = system.generator(i) * w;
        grew = true;
      }
    }
  }
  return w;
}

int parabolic_length(const CoxeterSystem& system, ParabolicSubset subset) {
  return longest_element(system, subset).length();
}

DoubleCoset::DoubleCoset(ParabolicSubset left, Element min, ParabolicSubset right)
    : left_(left), min_(std::move(min)), right_(right) {
  require_valid(min_.system(), left_);
  require_valid(min_.system(), right_);
  for (int i : left_.indices())
    if (is_left_descent(min_, i)) throw InvalidArgument("representative has a left descent in the left frame");
  for (int j : right_.indices())
    if (is_right_descent(min_, j)) throw InvalidArgument("representative has a right descent in the right frame");
}

DoubleCoset identity_coset(const CoxeterSystem& system, ParabolicSubset frame) {
  return DoubleCoset(frame, system.identity(), frame);
}

DoubleCoset coset_of(ParabolicSubset left, const Element& w, ParabolicSubset right) {
  const auto& sys = w.system();
  require_valid(sys, left);
  require_valid(sys, right);
  Element x = w;
  for (;;) {
    bool stripped = false;
    for (int i : left.indices()) {
      if (is_left_descent(x, i)) {
        x = sys.generator(i) * x;
        stripped = true;
        break;
      }
    }
    if (stripped) continue;
    for (int j : right.indices()) {
      if (is_right_descent(x, j)) {
        x = x * sys.generator(j);
        stripped = true;
        break;
      }
    }
    if (!stripped) break;
  }
  return DoubleCoset(left, std::move(x), right);
}

bool contains(const DoubleCoset& p, const Element& w) { return coset_of(p.left(), w, p.right()) == p; }

Element max_elem(const DoubleCoset& p) {
  const auto& sys = p.system();
  return star_product(star_product(longest_element(sys, p.left()), p.min()), longest_element(sys, p.right()));
}

ParabolicSubset left_redundancy(const DoubleCoset& p) {
  ParabolicSubset out;
  for (int j : p.right().indices()) {
    auto i = as_simple(conjugate(p.min(), j));
    if (i && p.left().contains(*i)) out = out.with(*i);
  }
  return out;
}

ParabolicSubset right_redundancy(const DoubleCoset& p) {
  ParabolicSubset out;
  for (int j : p.right().indices()) {
    auto i = as_simple(conjugate(p.min(), j));
    if (i && p.left().contains(*i)) out = out.with(j);
  }
  return out;
}

bool is_core_by_length(const DoubleCoset& p) {
  const auto& sys = p.system();
  Element top = max_elem(p);
  Element wl = longest_element(sys, p.left());
  Element wr = longest_element(sys, p.right());
  Element via_left = wl * p.min();
  Element via_right = p.min() * wr;
  return top == via_left && top == via_right && top.length() == wl.length() + p.min().length() &&
         top.length() == p.min().length() + wr.length();
}

bool is_core(const DoubleCoset& p) {
  ParabolicSubset image;
  bool all_simple = true;
  for (int j : p.right().indices()) {
    auto i = as_simple(conjugate(p.min(), j));
    if (!i) {
      all_simple = false;
      break;
    }
    image = image.with(*i);
  }
  bool result = all_simple && image == p.left();
#ifndef NDEBUG
  if (result != is_core_by_length(p)) throw std::logic_error("core criteria disagree");
#endif
  return result;
}

DoubleCoset core(const DoubleCoset& p) { return DoubleCoset(left_redundancy(p), p.min(), right_redundancy(p)); }

void require_frames_chain(const DoubleCoset& p, const DoubleCoset& q) {
  if (p.system() != q.system()) throw SystemMismatch("cosets from " + p.system().name() + " and " + q.system().name());
  if (p.right() != q.left())
    throw FrameMismatch("right frame " + format_subset(p.right()) + " does not match left frame " +
                        format_subset(q.left()));
}

DoubleCoset star_compose(const DoubleCoset& p, const DoubleCoset& q) {
  require_frames_chain(p, q);
  return coset_of(p.left(), star_product(max_elem(p), max_elem(q)), q.right());
}

bool is_reduced_composition(const DoubleCoset& p, const DoubleCoset& q) {
  require_frames_chain(p, q);
  Element head = max_elem(p) * longest_element(p.system(), p.right());
  Element tail = max_elem(q);
  return head.length() + tail.length() == (head * tail).length();
}

DoubleCoset invert(const DoubleCoset& p) { return DoubleCoset(p.right(), p.min().inverse(), p.left()); }

std::vector<DoubleCoset> enumerate_cosets(const CoxeterSystem& system, ParabolicSubset left, ParabolicSubset right,
                                          std::size_t cap) {
  std::unordered_set<DoubleCoset> seen;
  for (const auto& w : all_elements(system, cap)) seen.insert(coset_of(left, w, right));
  std::vector<DoubleCoset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), ordered_before);
  return out;
}

std::vector<DoubleCoset> enumerate_core_cosets(const CoxeterSystem& system, ParabolicSubset right, std::size_t cap) {
  require_valid(system, right);
  std::vector<DoubleCoset> out;
  for (const auto& w : all_elements(system, cap)) {
    if (!(right_descents(w) & right).empty()) continue;
    ParabolicSubset left;
    bool simple = true;
    for (int j : right.indices()) {
      auto i = as_simple(conjugate(w, j));
      if (!i) {
        simple = false;
        break;
      }
      left = left.with(*i);
    }
    if (simple) out.emplace_back(left, w, right);
  }
  std::sort(out.begin(), out.end(), ordered_before);
  return out;
}

std::vector<ParabolicSubset> all_subsets(const CoxeterSystem& system) {
  std::vector<ParabolicSubset> out;
  auto idx = system.indices();
  const std::uint32_t count = 1u << idx.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    ParabolicSubset s;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if ((mask >> k) & 1u) s = s.with(idx[k]);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.bits() < b.bits(); });
  return out;
}

std::string format_subset(ParabolicSubset subset) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : subset.indices()) {
    if (!first) os << ',';
    first = false;
    os << i;
  }
  os << '}';
  return os.str();
}

ParabolicSubset parse_subset(const std::string& text) {
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  skip();
  if (k >= text.size() || text[k] != '{') throw ParseError("expected '{'", k);
  ++k;
  std::vector<int> indices;
  skip();
  if (k < text.size() && text[k] == '}') {
    ++k;
  } else {
    for (;;) {
      skip();
      std::size_t start = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == start) throw ParseError("expected simple index", k);
      indices.push_back(std::stoi(text.substr(start, k - start)));
      skip();
      if (k < text.size() && text[k] == ',') {
        ++k;
        continue;
      }
      if (k < text.size() && text[k] == '}') {
        ++k;
        break;
      }
      throw ParseError("expected ',' or '}'", k);
    }
  }
  skip();
  if (k != text.size()) throw ParseError("trailing characters", k);
  return ParabolicSubset(std::span<const int>(indices));
}

}  // namespace dcoset

std::size_t std::hash<dcoset::DoubleCoset>::operator()(const dcoset::DoubleCoset& p) const noexcept {
  std::size_t h = std::hash<dcoset::Element>{}(p.min());
  h ^= static_cast<std::size_t>(p.left().bits()) * 0x9e3779b97f4a7c15ull;
  h ^= static_cast<std::size_t>(p.right().bits()) * 0xc2b2ae3d27d4eb4full + (h << 6);
  return h;
}
