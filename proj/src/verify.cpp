#include "dcoset/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dcoset/errors.hpp"
#include "dcoset/nilcox.hpp"

namespace dcoset {

bool SuiteReport::passed() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.passed(); });
}

int SuiteReport::checked() const {
  return std::accumulate(cells.begin(), cells.end(), 0, [](int n, const CellResult& c) { return n + c.checked; });
}

int SuiteReport::failure_count() const {
  return std::accumulate(cells.begin(), cells.end(), 0,
                         [](int n, const CellResult& c) { return n + static_cast<int>(c.failures.size()); });
}

namespace {

using CellCheck = void (*)(const CoxeterSystem&, ParabolicSubset, CellResult&);

struct Suite {
  std::string name;
  std::vector<CartanType> types;
  int max_a;
  int max_b;
  CellCheck check;
};

void expect(CellResult& cell, bool ok, const std::string& message) {
  ++cell.checked;
  if (!ok) cell.failures.push_back(message);
}

std::string show(const DoubleCoset& p) {
  return format_subset(p.left()) + " " + format_element(p.min()) + " " + format_subset(p.right());
}

std::uint64_t factorial(int k) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

int free_count(const CoxeterSystem& system, ParabolicSubset frame) { return (system.all_simples() - frame).size(); }

// Order of the squashed group: S_{n-|J|} in type A, B_k in type B.
std::uint64_t squashed_order(const CoxeterSystem& system, ParabolicSubset frame) {
  const int k = free_count(system, frame);
  return system.cartan() == CartanType::B ? factorial(k) << k : factorial(k + 1);
}

// Core cosets with the given left frame.
std::vector<DoubleCoset> cores_leaving(const CoxeterSystem& system, ParabolicSubset left) {
  std::vector<DoubleCoset> out;
  for (const auto& p : enumerate_core_cosets(system, left)) out.push_back(invert(p));
  return out;
}

SquashedPermutation squash_any(const DoubleCoset& p) {
  return p.system().cartan() == CartanType::B ? squash_coset_b(p) : squash_coset(p);
}

DoubleCoset unsquash_any(const CoxeterSystem& system, ParabolicSubset right, const Element& sigma) {
  return system.cartan() == CartanType::B ? unsquash_b(system, right, sigma) : unsquash(system, right, sigma);
}

CoxeterSystem squashed_system(const CoxeterSystem& system, ParabolicSubset right) {
  const int k = free_count(system, right);
  return system.cartan() == CartanType::B ? CoxeterSystem::type_b(k) : CoxeterSystem::type_a(k);
}

void check_core_atomic(const CoxeterSystem& system, ParabolicSubset right, CellResult& cell) {
  for (const auto& p : enumerate_core_cosets(system, right)) {
    AtomicSequence seq = atomic_rex_of_core(p);
    OneStepExpression e = atomic_expression(p.left(), seq);
    MultistepExpression m = to_multistep(e);
    expect(cell, e.finish() == p.right(), "greedy rex ends at the wrong frame for " + show(p));
    expect(cell, is_reduced(system, m), "greedy rex not reduced for " + show(p));
    expect(cell, expected_length(system, m) == max_elem(p).length(),
           "alternating length sum differs from the length of the maximum for " + show(p));
    expect(cell, evaluate(system, m) == p, "greedy rex does not express " + show(p));
    Composite c = compose_atomics(system, p.left(), seq);
    expect(cell, c.reduced && c.coset == p, "atomic chain does not compose to " + show(p));
    for (const auto& a : seq) expect(cell, is_atomic(a.coset()), "non-atomic factor in the rex of " + show(p));
  }
}

void check_squash_bijection(const CoxeterSystem& system, ParabolicSubset right, CellResult& cell) {
  const auto cores = enumerate_core_cosets(system, right);
  const std::uint64_t expected = squashed_order(system, right);
  expect(cell, cores.size() == expected,
         "found " + std::to_string(cores.size()) + " core cosets, expected " + std::to_string(expected));
  std::set<Element> images;
  for (const auto& p : cores) {
    Element sigma = squash_any(p);
    images.insert(sigma);
    expect(cell, unsquash_any(system, right, sigma) == p, "unsquash(squash(p)) != p for " + show(p));
  }
  for (const auto& sigma : all_elements(squashed_system(system, right))) {
    DoubleCoset p = unsquash_any(system, right, sigma);
    expect(cell, is_core(p) && p.right() == right, "unsquash of " + format_element(sigma) + " is not a core coset ending at J");
    expect(cell, squash_any(p) == sigma, "squash(unsquash(sigma)) != sigma for " + format_element(sigma));
  }
  expect(cell, images.size() == cores.size(), "squashing is not injective");
}

void check_atomic_rex_bijection(const CoxeterSystem& system, ParabolicSubset right, CellResult& cell) {
  for (const auto& p : enumerate_core_cosets(system, right)) {
    std::set<std::vector<int>> words;
    for (const auto& seq : all_atomic_rexes(p)) {
      words.insert(index_word(seq));
      expect(cell, lift_word(system, right, index_word(seq)) == seq, "lift_word does not invert index_word for " + show(p));
    }
    expect(cell, words == all_reduced_words(squash_any(p)), "atomic index words differ from reduced words of Sq(p) for " + show(p));
  }
}

void check_matsumoto(const CoxeterSystem& system, ParabolicSubset right, CellResult& cell) {
  for (const auto& p : enumerate_core_cosets(system, right)) {
    bool ok = system.cartan() == CartanType::B ? matsumoto_connected_b(p) : matsumoto_connected(p);
    expect(cell, ok, "braid closure misses atomic rexes of " + show(p));
  }
}

// J is the shared middle frame of p (I,J) and q (J,K).
void check_mimimi(const CoxeterSystem& system, ParabolicSubset middle, CellResult& cell) {
  const auto ps = enumerate_core_cosets(system, middle);
  const auto qs = cores_leaving(system, middle);
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      Element prod = p.min() * q.min();
      bool additive = prod.length() == p.min().length() + q.min().length();
      bool reduced = is_reduced_composition(p, q);
      expect(cell, reduced == additive, "reducedness disagrees with length additivity for " + show(p) + " * " + show(q));
      if (!reduced) continue;
      DoubleCoset r = star_compose(p, q);
      expect(cell, r.min() == prod, "min(p*q) != min(p) min(q) for " + show(p) + " * " + show(q));
      expect(cell, is_core(r), "reduced product of cores is not core: " + show(r));
    }
  }
}

AtomicCoset generator_any(const CoxeterSystem& system, ParabolicSubset right, int position) {
  return detail::generator_at(system, right, position);
}

void check_atomatom(const CoxeterSystem& system, ParabolicSubset middle, CellResult& cell) {
  const auto ps = atomics_ending_at(system, middle);
  std::vector<DoubleCoset> qs;
  for (const auto& a : atomics_ending_at(system, middle)) {
    qs.push_back(invert(a.coset()));
    expect(cell, is_atomic(qs.back()), "inverse of an atomic coset is not atomic: " + show(qs.back()));
  }
  for (const auto& a : ps) {
    const DoubleCoset& p = a.coset();
    expect(cell, star_compose(star_compose(p, invert(p)), p) == p, "p*(p^-1)*p != p for " + show(p));
  }
  // Pairs p (I,J), q (J,K) of atomics. Inverses of atomics are atomic.
  for (const auto& a : ps) {
    const DoubleCoset& p = a.coset();
    for (const auto& q : qs) {
      if (is_reduced_composition(p, q)) continue;
      DoubleCoset r = star_compose(p, q);
      expect(cell, is_core(r) == (p == q), "non-reduced atomic pair core iff equal fails for " + show(p) + " * " + show(q));
      if (p == q) expect(cell, r == p, "p*p != p for " + show(p));
    }
  }
  const int k = free_count(system, middle);
  for (int i = 0; i < k; ++i) {
    AtomicCoset aj = generator_any(system, middle, i);
    AtomicCoset ai = generator_any(system, aj.left(), i);
    const std::string tag = "generator " + std::to_string(i) + " at " + format_subset(middle);
    expect(cell, !is_reduced_composition(ai.coset(), aj.coset()), "a_i^I * a_i^J is reduced, " + tag);
    DoubleCoset sq = star_compose(ai.coset(), aj.coset());
    DoubleCoset expected = evaluate(system, MultistepExpression({middle, aj.middle(), middle}));
    expect(cell, sq == expected, "a_i^I * a_i^J differs from [J,Js,J], " + tag);
    expect(cell, ai.coset() == invert(aj.coset()), "a_i^I is not the inverse of a_i^J, " + tag);
    expect(cell, star_compose(aj.coset(), sq) == aj.coset(), "a_i * a_i * a_i^J != a_i^J, " + tag);
  }
}

// Every (left, right)-coset with one reduced expression for it.
std::vector<std::pair<DoubleCoset, MultistepExpression>> rexes_between(const CoxeterSystem& system, ParabolicSubset left,
                                                                       ParabolicSubset right) {
  std::vector<std::pair<DoubleCoset, MultistepExpression>> out;
  for (const auto& r : enumerate_cosets(system, left, right)) out.emplace_back(r, factor_through_core(r));
  return out;
}

bool expresses_reduced(const CoxeterSystem& system, const MultistepExpression& m, const DoubleCoset& p) {
  return is_reduced(system, m) && evaluate(system, m) == p;
}

void check_add_remove(const CoxeterSystem& system, ParabolicSubset right, CellResult& cell) {
  std::map<std::pair<ParabolicSubset, ParabolicSubset>, std::vector<std::pair<DoubleCoset, MultistepExpression>>> cache;
  auto rexes = [&](ParabolicSubset l, ParabolicSubset r) -> const auto& {
    auto key = std::make_pair(l, r);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, rexes_between(system, l, r)).first;
    return it->second;
  };
  for (ParabolicSubset left : all_subsets(system)) {
    for (const auto& p : enumerate_cosets(system, left, right)) {
      const ParabolicSubset ldes = left_descents(max_elem(p));
      const ParabolicSubset rdes = right_descents(max_elem(p));
      for (int s : system.indices()) {
        const std::string tag = " s=" + std::to_string(s) + " for " + show(p);
        if (!left.contains(s)) {
          bool found = false;
          for (const auto& [r, rex] : rexes(left.with(s), right))
            found = found || expresses_reduced(system, concatenate(MultistepExpression({left, left.with(s), left.with(s)}), rex), p);
          expect(cell, found == ldes.contains(s), "left addition" + tag);
        } else {
          bool found = false;
          for (const auto& [r, rex] : rexes(left.without(s), right))
            found = found || expresses_reduced(system, concatenate(MultistepExpression({left, left, left.without(s)}), rex), p);
          expect(cell, found == !left_redundancy(p).contains(s), "left removal" + tag);
        }
        if (!right.contains(s)) {
          bool found = false;
          for (const auto& [r, rex] : rexes(left, right.with(s)))
            found = found || expresses_reduced(system, concatenate(rex, MultistepExpression({right.with(s), right.with(s), right})), p);
          expect(cell, found == rdes.contains(s), "right addition" + tag);
        } else {
          bool found = false;
          for (const auto& [r, rex] : rexes(left, right.without(s)))
            found = found || expresses_reduced(system, concatenate(rex, MultistepExpression({right.without(s), right, right})), p);
          expect(cell, found == !right_redundancy(p).contains(s), "right removal" + tag);
        }
      }
    }
  }
}

void check_redundancy_a(const CoxeterSystem& system, ParabolicSubset right, CellResult& cell) {
  for (ParabolicSubset left : all_subsets(system)) {
    for (const auto& p : enumerate_cosets(system, left, right)) {
      const Element& y = p.min();
      const ParabolicSubset rr = right_redundancy(p);
      ParabolicSubset image;
      for (int j : rr.indices()) image = image.with(y(j));
      expect(cell, image == left_redundancy(p), "leftred != min(rightred) for " + show(p));
      const bool core = is_core(p);
      for (int j : right.indices()) {
        bool adjacent = y(j + 1) == y(j) + 1;
        expect(cell, rr.contains(j) == (adjacent && left.contains(y(j))),
               "redundancy criterion fails at j=" + std::to_string(j) + " for " + show(p));
        if (core) expect(cell, rr.contains(j) == adjacent, "core redundancy criterion fails at j=" + std::to_string(j) + " for " + show(p));
      }
    }
  }
}

void check_nilcox(const CoxeterSystem& system, ParabolicSubset source, CellResult& cell) {
  RelationReport rel = verify_relations_at(system, source);
  cell.checked += rel.checked;
  cell.failures.insert(cell.failures.end(), rel.failures.begin(), rel.failures.end());

  auto basis = ad_basis(system, source);
  const std::uint64_t expected = squashed_order(system, source);
  expect(cell, basis.size() == expected,
         "Hom out of " + format_subset(source) + " has rank " + std::to_string(basis.size()) + ", expected " + std::to_string(expected));
  auto reached = reachable_basis(system, source);
  expect(cell, std::set(reached.begin(), reached.end()) == std::set(basis.begin(), basis.end()),
         "generator products out of " + format_subset(source) + " do not span exactly the core cosets");
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"core-atomic", {CartanType::A, CartanType::B, CartanType::I2}, 5, 3, check_core_atomic},
      {"squash-bijection", {CartanType::A, CartanType::B}, 5, 3, check_squash_bijection},
      {"atomic-rex-bijection", {CartanType::A, CartanType::B}, 4, 3, check_atomic_rex_bijection},
      {"matsumoto", {CartanType::A, CartanType::B}, 4, 3, check_matsumoto},
      {"mimimi", {CartanType::A, CartanType::B}, 4, 3, check_mimimi},
      {"atomatom", {CartanType::A, CartanType::B}, 4, 3, check_atomatom},
      {"nilcox-relations", {CartanType::A, CartanType::B}, 4, 3, check_nilcox},
      {"add-remove", {CartanType::A, CartanType::B}, 3, 3, check_add_remove},
      {"redundancy-a", {CartanType::A}, 4, 0, check_redundancy_a},
  };
  return all;
}

// Every type-B-capable suite, run on type B only.
const std::vector<std::string> kTypeB{"core-atomic", "squash-bijection", "atomic-rex-bijection", "matsumoto",
                                      "mimimi",      "atomatom",         "nilcox-relations",     "add-remove"};

const Suite& find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return s;
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  out.push_back("type-b");
  return out;
}

std::vector<CartanType> suite_types(const std::string& suite) {
  if (suite == "type-b") return {CartanType::B};
  return find_suite(suite).types;
}

int default_max_rank(const std::string& suite, CartanType type) {
  if (suite == "type-b") return 3;
  const Suite& s = find_suite(suite);
  switch (type) {
    case CartanType::A:
      return s.max_a;
    case CartanType::B:
      return s.max_b;
    case CartanType::I2:
      return 2;
  }
  return 0;
}

std::vector<CoxeterSystem> suite_systems(const std::string& suite, const SuiteOptions& options) {
  auto types = suite_types(suite);
  if (options.type) {
    if (std::find(types.begin(), types.end(), *options.type) == types.end())
      throw InvalidArgument("suite '" + suite + "' does not support type " + to_string(*options.type));
    types = {*options.type};
  }
  std::vector<CoxeterSystem> out;
  for (CartanType type : types) {
    if (type == CartanType::I2) {
      for (int m = 3; m <= options.max_bond; ++m) out.push_back(CoxeterSystem::dihedral(m));
      continue;
    }
    int top = options.max_rank.value_or(default_max_rank(suite, type));
    for (int r = 1; r <= top; ++r)
      out.push_back(type == CartanType::A ? CoxeterSystem::type_a(r) : CoxeterSystem::type_b(r));
  }
  return out;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options, const CellCallback& on_cell) {
  if (suite == "type-b") {
    if (options.type && *options.type != CartanType::B) throw InvalidArgument("suite 'type-b' runs on type B only");
    SuiteOptions b = options;
    b.type = CartanType::B;
    SuiteReport out{suite, {}};
    for (const auto& name : kTypeB) {
      SuiteReport part = run_suite(name, b, on_cell);
      for (auto& cell : part.cells) {
        cell.system = name + " " + cell.system;
        out.cells.push_back(std::move(cell));
      }
    }
    return out;
  }
  const Suite& s = find_suite(suite);
  SuiteReport out{suite, {}};
  for (const auto& system : suite_systems(suite, options)) {
    for (ParabolicSubset frame : all_subsets(system)) {
      CellResult cell{system.name(), format_subset(frame), 0, {}};
      try {
        s.check(system, frame, cell);
      } catch (const Error& e) {
        cell.failures.push_back(std::string("error: ") + e.what());
      }
      if (on_cell) on_cell(cell);
      out.cells.push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace dcoset
