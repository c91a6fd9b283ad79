#include "dcoset/squash_b.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "dcoset/errors.hpp"

namespace dcoset {

int SignedBlockStructure::class_of(int x) const {
  if (std::abs(x) <= central) return 0;
  for (int c = 0; c < count(); ++c)
    if (classes[c].contains(std::abs(x))) return x > 0 ? c + 1 : -(c + 1);
  throw InvalidArgument("point " + std::to_string(x) + " lies in no class");
}

namespace {

void require_type_b(const CoxeterSystem& system) {
  if (system.cartan() != CartanType::B) throw InvalidArgument("operation requires type B, got " + system.name());
}

struct SignedTarget {
  int sign;
  Block block;
};

// Where y sends a positive J-class, if it lands order-preservingly on an I-class.
std::optional<SignedTarget> block_target(const Element& y, const Block& b, const SignedBlockStructure& to) {
  int v = y(b.first);
  int c = to.class_of(v);
  if (c == 0) return std::nullopt;
  const Block& dst = to.classes[std::abs(c) - 1];
  if (dst.size() != b.size()) return std::nullopt;
  int start = c > 0 ? dst.first : -dst.last;
  for (int o = 0; o < b.size(); ++o)
    if (y(b.first + o) != start + o) return std::nullopt;
  return SignedTarget{c > 0 ? 1 : -1, dst};
}

}  // namespace

SignedBlockStructure classes_b(const CoxeterSystem& system, ParabolicSubset right) {
  require_type_b(system);
  if (!system.valid_subset(right)) throw InvalidArgument("invalid frame " + format_subset(right));
  SignedBlockStructure out;
  while (right.contains(out.central)) ++out.central;
  int start = out.central + 1;
  for (int x = start; x <= system.rank(); ++x) {
    if (x == system.rank() || !right.contains(x)) {
      out.classes.push_back({start, x});
      start = x + 1;
    }
  }
  return out;
}

bool is_block_permutation_b(const Element& y, ParabolicSubset left, ParabolicSubset right) {
  require_type_b(y.system());
  if (left.size() != right.size()) throw InvalidArgument("block permutation needs frames of equal size");
  SignedBlockStructure from = classes_b(y.system(), right);
  SignedBlockStructure to = classes_b(y.system(), left);
  if (from.central != to.central) return false;
  for (int x = 1; x <= from.central; ++x)
    if (y(x) != x) return false;
  for (const auto& b : from.classes)
    if (!block_target(y, b, to)) return false;
  return true;
}

SquashedPermutation squash_coset_b(const DoubleCoset& p) {
  require_type_b(p.system());
  if (!is_core(p)) throw NotCore("only core cosets squash");
  const Element& y = p.min();
  if (!is_block_permutation_b(y, p.left(), p.right()))
    throw std::logic_error("minimal element of a core coset is not a block permutation");
  SignedBlockStructure from = classes_b(p.system(), p.right());
  SignedBlockStructure to = classes_b(p.system(), p.left());
  std::vector<int> images;
  for (const auto& b : from.classes) images.push_back(to.class_of(y(b.first)));
  return Element(CoxeterSystem::type_b(from.count()), std::move(images));
}

DoubleCoset unsquash_b(const CoxeterSystem& system, ParabolicSubset right, const SquashedPermutation& sigma) {
  require_type_b(system);
  SignedBlockStructure from = classes_b(system, right);
  const int k = from.count();
  if (sigma.system().cartan() != CartanType::B || sigma.system().rank() != k)
    throw InvalidArgument("squashed permutation must lie in B_" + std::to_string(k));
  std::vector<int> sizes(k);
  for (int c = 0; c < k; ++c) sizes[std::abs(sigma(c + 1)) - 1] = from.classes[c].size();
  std::vector<Block> to;
  int next = from.central + 1;
  for (int c = 0; c < k; ++c) {
    to.push_back({next, next + sizes[c] - 1});
    next += sizes[c];
  }
  std::vector<int> images(static_cast<std::size_t>(system.rank()));
  for (int x = 1; x <= from.central; ++x) images[x - 1] = x;
  for (int c = 0; c < k; ++c) {
    const Block& src = from.classes[c];
    int target = sigma(c + 1);
    const Block& dst = to[std::abs(target) - 1];
    int start = target > 0 ? dst.first : -dst.last;
    for (int o = 0; o < src.size(); ++o) images[src.first + o - 1] = start + o;
  }
  ParabolicSubset left;
  for (int i = 0; i < from.central; ++i) left = left.with(i);
  for (const auto& b : to)
    for (int x = b.first; x < b.last; ++x) left = left.with(x);
  return DoubleCoset(left, Element(system, std::move(images)), right);
}

AtomicCoset atomic_generator_b(const CoxeterSystem& system, ParabolicSubset right, int i) {
  require_type_b(system);
  return detail::generator_at(system, right, i);
}

std::vector<int> apply_braid_move_b(std::span<const int> word, std::size_t pos, BraidKind kind) {
  std::vector<int> out(word.begin(), word.end());
  switch (kind) {
    case BraidKind::braid4: {
      bool match = pos + 4 <= word.size() && word[pos] == word[pos + 2] && word[pos + 1] == word[pos + 3] &&
                   std::min(word[pos], word[pos + 1]) == 0 && std::max(word[pos], word[pos + 1]) == 1;
      if (!match) throw InvalidArgument("braid4 pattern does not match at position " + std::to_string(pos));
      for (std::size_t o = 0; o < 4; ++o) out[pos + o] = 1 - word[pos + o];
      return out;
    }
    case BraidKind::braid3:
      if (pos + 3 <= word.size() && std::min({word[pos], word[pos + 1]}) == 0)
        throw InvalidArgument("braids involving index 0 have length 4");
      return apply_braid_move(word, pos, kind);
    case BraidKind::comm:
      return apply_braid_move(word, pos, kind);
  }
  throw InvalidArgument("unknown braid move");
}

bool matsumoto_connected_b(const DoubleCoset& p) {
  require_type_b(p.system());
  return detail::braid_closure_matches(p);
}

}  // namespace dcoset
