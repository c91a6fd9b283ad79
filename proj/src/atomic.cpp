#include "dcoset/atomic.hpp"

#include <map>
#include <stdexcept>

#include "dcoset/errors.hpp"

namespace dcoset {

AtomicCoset atomic_from(const CoxeterSystem& system, ParabolicSubset middle, int added) {
  if (!middle.contains(added)) throw InvalidArgument("added index " + std::to_string(added) + " not in " + format_subset(middle));
  Element top = longest_element(system, middle);
  auto removed = as_simple(top * system.generator(added) * top);
  if (!removed) throw std::logic_error("conjugate of a simple by w_M is not simple");
  DoubleCoset coset = coset_of(middle.without(added), top, middle.without(*removed));
  return AtomicCoset(std::move(coset), middle, added, *removed);
}

bool is_atomic(const DoubleCoset& p) {
  if (!is_core(p) || p.min().is_identity()) return false;
  const auto& sys = p.system();
  for (int s : (sys.all_simples() - p.left()).indices()) {
    ParabolicSubset middle = p.left().with(s);
    if (!p.right().subset_of(middle) || p.right().size() != p.left().size()) continue;
    AtomicCoset a = atomic_from(sys, middle, s);
    if (a.coset() == p) return true;
  }
  return false;
}

namespace {

struct Split {
  AtomicCoset atom;
  DoubleCoset rest;
};

// Splits p = [I + s - t] . q for s in leftdes(max p) \ I.
Split split_off(const DoubleCoset& p, const Element& top, int s) {
  const auto& sys = p.system();
  ParabolicSubset middle = p.left().with(s);
  AtomicCoset atom = atomic_from(sys, middle, s);
  Element rest_top = longest_element(sys, atom.right()) * longest_element(sys, middle) * top;
  DoubleCoset rest = coset_of(atom.right(), rest_top, p.right());
  if (rest_top.length() >= top.length()) throw std::logic_error("atomic step did not shorten the coset");
  return {std::move(atom), std::move(rest)};
}

void require_core(const DoubleCoset& p) {
  if (!is_core(p)) throw NotCore("coset is not core");
}

}  // namespace

AtomicSequence atomic_rex_of_core(const DoubleCoset& p) {
  require_core(p);
  AtomicSequence out;
  DoubleCoset cur = p;
  for (;;) {
    Element top = max_elem(cur);
    ParabolicSubset candidates = left_descents(top) - cur.left();
    if (candidates.empty()) {
      if (cur.left() != cur.right() || !cur.min().is_identity())
        throw std::logic_error("greedy atomic rex ended away from an identity coset");
      return out;
    }
    Split step = split_off(cur, top, candidates.indices().front());
    out.push_back(std::move(step.atom));
    cur = std::move(step.rest);
  }
}

namespace {

using Memo = std::map<DoubleCoset, std::vector<AtomicSequence>>;

const std::vector<AtomicSequence>& rexes(const DoubleCoset& p, Memo& memo) {
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  std::vector<AtomicSequence> out;
  Element top = max_elem(p);
  ParabolicSubset candidates = left_descents(top) - p.left();
  if (candidates.empty()) {
    out.emplace_back();
  } else {
    for (int s : candidates.indices()) {
      Split step = split_off(p, top, s);
      for (const auto& tail : rexes(step.rest, memo)) {
        AtomicSequence seq{step.atom};
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.push_back(std::move(seq));
      }
    }
  }
  return memo.emplace(p, std::move(out)).first->second;
}

}  // namespace

std::vector<AtomicSequence> all_atomic_rexes(const DoubleCoset& p) {
  require_core(p);
  Memo memo;
  return rexes(p, memo);
}

OneStepExpression atomic_expression(ParabolicSubset start, std::span<const AtomicCoset> seq) {
  std::vector<Step> steps;
  for (const auto& a : seq) {
    steps.push_back({true, a.added()});
    steps.push_back({false, a.removed()});
  }
  return OneStepExpression(start, std::move(steps));
}

MultistepExpression factor_through_core(const DoubleCoset& p) {
  DoubleCoset c = core(p);
  AtomicSequence seq = atomic_rex_of_core(c);
  MultistepExpression head({p.left(), p.left(), c.left()});
  MultistepExpression body = to_multistep(atomic_expression(c.left(), seq));
  MultistepExpression tail({c.right(), p.right(), p.right()});
  return concatenate(concatenate(head, body), tail);
}

Composite compose_atomics(const CoxeterSystem& system, ParabolicSubset start, std::span<const AtomicCoset> seq) {
  DoubleCoset acc = identity_coset(system, start);
  bool reduced = true;
  for (const auto& a : seq) {
    require_frames_chain(acc, a.coset());
    if (reduced) {
      // Both factors are core here, so reducedness is length additivity of minima.
      reduced = acc.min().length() + a.coset().min().length() == (acc.min() * a.coset().min()).length();
    }
    acc = star_compose(acc, a.coset());
  }
  return {std::move(acc), reduced};
}

std::vector<AtomicCoset> atomics_ending_at(const CoxeterSystem& system, ParabolicSubset right) {
  std::vector<AtomicCoset> out;
  for (int t : (system.all_simples() - right).indices()) {
    ParabolicSubset middle = right.with(t);
    Element top = longest_element(system, middle);
    auto s = as_simple(top * system.generator(t) * top);
    out.push_back(atomic_from(system, middle, *s));
  }
  return out;
}

std::set<DoubleCoset> atomic_closure(const CoxeterSystem& system, ParabolicSubset right, int max_steps) {
  std::set<DoubleCoset> seen{identity_coset(system, right)};
  std::vector<DoubleCoset> frontier(seen.begin(), seen.end());
  for (int step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<DoubleCoset> next;
    for (const auto& p : frontier) {
      for (const auto& a : atomics_ending_at(system, p.left())) {
        DoubleCoset q = star_compose(a.coset(), p);
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace dcoset
