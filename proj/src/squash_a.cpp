#include "dcoset/squash_a.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "dcoset/errors.hpp"
#include "dcoset/squash_b.hpp"

namespace dcoset {

int BlockStructure::class_of(int x) const {
  for (int c = 0; c < count(); ++c)
    if (classes[c].contains(x)) return c;
  throw InvalidArgument("point " + std::to_string(x) + " lies in no class");
}

namespace {

void require_type(const CoxeterSystem& system, CartanType type) {
  if (system.cartan() != type)
    throw InvalidArgument("operation requires type " + to_string(type) + ", got " + system.name());
}

BlockStructure blocks_from(int first, int last, ParabolicSubset joins) {
  BlockStructure out;
  int start = first;
  for (int x = first; x <= last; ++x) {
    if (x == last || !joins.contains(x)) {
      out.classes.push_back({start, x});
      start = x + 1;
    }
  }
  return out;
}

// Subset generated by joining consecutive points inside each block.
ParabolicSubset frame_of(const std::vector<Block>& blocks) {
  ParabolicSubset out;
  for (const auto& b : blocks)
    for (int x = b.first; x < b.last; ++x) out = out.with(x);
  return out;
}

void collect_words(const Element& w, std::vector<int>& prefix, std::set<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.insert(prefix);
    return;
  }
  for (int i : left_descents(w).indices()) {
    prefix.push_back(i);
    collect_words(w.system().generator(i) * w, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

BlockStructure classes(const CoxeterSystem& system, ParabolicSubset right) {
  require_type(system, CartanType::A);
  if (!system.valid_subset(right)) throw InvalidArgument("invalid frame " + format_subset(right));
  return blocks_from(1, system.degree(), right);
}

bool is_block_permutation(const Element& y, ParabolicSubset left, ParabolicSubset right) {
  require_type(y.system(), CartanType::A);
  if (left.size() != right.size()) throw InvalidArgument("block permutation needs frames of equal size");
  BlockStructure from = classes(y.system(), right);
  BlockStructure to = classes(y.system(), left);
  for (const auto& b : from.classes) {
    int target = y(b.first);
    auto it = std::find_if(to.classes.begin(), to.classes.end(), [&](const Block& c) { return c.first == target; });
    if (it == to.classes.end() || it->size() != b.size()) return false;
    for (int o = 0; o < b.size(); ++o)
      if (y(b.first + o) != target + o) return false;
  }
  return true;
}

SquashedPermutation squash_coset(const DoubleCoset& p) {
  require_type(p.system(), CartanType::A);
  if (!is_core(p)) throw NotCore("only core cosets squash");
  const Element& y = p.min();
  if (!is_block_permutation(y, p.left(), p.right())) throw std::logic_error("minimal element of a core coset is not a block permutation");
  BlockStructure from = classes(p.system(), p.right());
  BlockStructure to = classes(p.system(), p.left());
  std::vector<int> images;
  for (const auto& b : from.classes) images.push_back(to.class_of(y(b.first)) + 1);
  return Element(CoxeterSystem::type_a(from.count() - 1), std::move(images));
}

DoubleCoset unsquash(const CoxeterSystem& system, ParabolicSubset right, const SquashedPermutation& sigma) {
  require_type(system, CartanType::A);
  BlockStructure from = classes(system, right);
  if (sigma.system().cartan() != CartanType::A || sigma.system().degree() != from.count())
    throw InvalidArgument("squashed permutation must lie in S_" + std::to_string(from.count()));
  const int k = from.count();
  std::vector<int> sizes(k);
  for (int c = 0; c < k; ++c) sizes[sigma(c + 1) - 1] = from.classes[c].size();
  std::vector<Block> to;
  int next = 1;
  for (int c = 0; c < k; ++c) {
    to.push_back({next, next + sizes[c] - 1});
    next += sizes[c];
  }
  std::vector<int> images(static_cast<std::size_t>(system.degree()));
  for (int c = 0; c < k; ++c) {
    const Block& src = from.classes[c];
    const Block& dst = to[sigma(c + 1) - 1];
    for (int o = 0; o < src.size(); ++o) images[src.first + o - 1] = dst.first + o;
  }
  return DoubleCoset(frame_of(to), Element(system, std::move(images)), right);
}

namespace detail {

int generator_base(CartanType type) { return type == CartanType::B ? 0 : 1; }

AtomicCoset generator_at(const CoxeterSystem& system, ParabolicSubset right, int position) {
  auto outside = (system.all_simples() - right).indices();
  if (position < 0 || position >= static_cast<int>(outside.size()))
    throw InvalidArgument("generator index out of range for frame " + format_subset(right));
  int removed = outside[position];
  ParabolicSubset middle = right.with(removed);
  Element top = longest_element(system, middle);
  auto added = as_simple(top * system.generator(removed) * top);
  return atomic_from(system, middle, *added);
}

bool braid_closure_matches(const DoubleCoset& p) {
  if (!is_core(p)) throw NotCore("braid closure requires a core coset");
  AtomicSequence greedy = atomic_rex_of_core(p);
  auto closure = braid_closure(p.system().cartan(), index_word(greedy));
  std::set<std::vector<int>> all;
  for (const auto& seq : all_atomic_rexes(p)) all.insert(index_word(seq));
  return closure == all;
}

}  // namespace detail

AtomicCoset atomic_generator(const CoxeterSystem& system, ParabolicSubset right, int i) {
  require_type(system, CartanType::A);
  return detail::generator_at(system, right, i - 1);
}

AtomicSequence lift_word(const CoxeterSystem& system, ParabolicSubset right, std::span<const int> word) {
  const int base = detail::generator_base(system.cartan());
  AtomicSequence out;
  ParabolicSubset cur = right;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    AtomicCoset a = detail::generator_at(system, cur, *it - base);
    cur = a.left();
    out.push_back(std::move(a));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> index_word(std::span<const AtomicCoset> seq) {
  std::vector<int> out;
  for (const auto& a : seq) {
    const auto& sys = a.coset().system();
    auto outside = (sys.all_simples() - a.right()).indices();
    auto pos = std::find(outside.begin(), outside.end(), a.removed()) - outside.begin();
    out.push_back(static_cast<int>(pos) + detail::generator_base(sys.cartan()));
  }
  return out;
}

std::vector<int> apply_braid_move(std::span<const int> word, std::size_t pos, BraidKind kind) {
  std::vector<int> out(word.begin(), word.end());
  switch (kind) {
    case BraidKind::braid3:
      if (pos + 3 > word.size() || word[pos] != word[pos + 2] || std::abs(word[pos] - word[pos + 1]) != 1)
        throw InvalidArgument("braid3 pattern does not match at position " + std::to_string(pos));
      out[pos] = out[pos + 2] = word[pos + 1];
      out[pos + 1] = word[pos];
      return out;
    case BraidKind::comm:
      if (pos + 2 > word.size() || std::abs(word[pos] - word[pos + 1]) <= 1)
        throw InvalidArgument("commutation pattern does not match at position " + std::to_string(pos));
      std::swap(out[pos], out[pos + 1]);
      return out;
    case BraidKind::braid4:
      break;
  }
  throw InvalidArgument("braid4 moves exist only in type B");
}

std::set<std::vector<int>> braid_closure(CartanType type, std::span<const int> word) {
  std::set<std::vector<int>> seen{std::vector<int>(word.begin(), word.end())};
  std::deque<std::vector<int>> queue(seen.begin(), seen.end());
  const std::vector<BraidKind> kinds =
      type == CartanType::B ? std::vector{BraidKind::braid3, BraidKind::braid4, BraidKind::comm}
                            : std::vector{BraidKind::braid3, BraidKind::comm};
  while (!queue.empty()) {
    auto w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (auto kind : kinds) {
        std::vector<int> next;
        try {
          next = type == CartanType::B ? apply_braid_move_b(w, pos, kind) : apply_braid_move(w, pos, kind);
        } catch (const InvalidArgument&) {
          continue;
        }
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

bool matsumoto_connected(const DoubleCoset& p) {
  require_type(p.system(), CartanType::A);
  return detail::braid_closure_matches(p);
}

std::set<std::vector<int>> all_reduced_words(const Element& w) {
  std::set<std::vector<int>> out;
  std::vector<int> prefix;
  collect_words(w, prefix, out);
  return out;
}

}  // namespace dcoset
