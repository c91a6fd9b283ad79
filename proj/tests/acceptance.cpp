// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dcoset/errors.hpp"
#include "dcoset/io.hpp"
#include "dcoset/verify.hpp"

using namespace dcoset;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome suites(const std::vector<std::pair<std::string, SuiteOptions>>& runs) {
  Outcome out;
  for (const auto& [name, options] : runs) {
    SuiteReport r = run_suite(name, options);
    if (!out.detail.empty()) out.detail += ", ";
    out.detail += name + ":" + std::to_string(r.checked()) + " checks";
    if (!r.passed()) {
      out.ok = false;
      for (const auto& cell : r.cells)
        if (!cell.passed()) {
          out.detail += " first failure " + cell.system + " J=" + cell.frame + ": " + cell.failures.front();
          break;
        }
    }
  }
  return out;
}

SuiteOptions only(CartanType type, int max_rank) {
  SuiteOptions o;
  o.type = type;
  o.max_rank = max_rank;
  return o;
}

// ℓ(w_I) in type A: a run of k consecutive indices generates S_{k+1}.
int parabolic_length_a(const ParabolicSubset& s) {
  int total = 0, run = 0, prev = -2;
  for (int i : s.indices()) {
    run = (i == prev + 1) ? run + 1 : 1;
    total += run;
    prev = i;
  }
  return total;
}

Outcome running_example() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  auto sys = CoxeterSystem::type_a(10);
  Expression e = parse_expression("[{2,3,6,10} +8 -8 +9 -10 +7 -6 +8 -8 +5 -5 +6 -7 +4 -2]");
  MultistepExpression m = to_multistep(e);
  DoubleCoset p = evaluate(sys, e);
  // Upper frames count positively, interior lower frames negatively.
  const auto& f = m.frames();
  int sum = 0;
  for (std::size_t k = 1; k < f.size(); k += 2) sum += parabolic_length_a(f[k]);
  for (std::size_t k = 2; k + 1 < f.size(); k += 2) sum -= parabolic_length_a(f[k]);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.ok = m.start() == ParabolicSubset{2, 3, 6, 10} && m.finish() == ParabolicSubset{3, 4, 6, 9} && m.steps() == 7 &&
           is_reduced(sys, e) && max_elem(p).length() == sum && is_core(p) && secs < 1.0;
  out.detail = "len " + std::to_string(max_elem(p).length()) + " vs alternating sum " + std::to_string(sum) + ", " +
               std::to_string(secs) + " s";
  return out;
}

Outcome example_s4() {
  auto sys = CoxeterSystem::type_a(3);
  DoubleCoset p = coset_of({1}, sys.from_word(std::vector{2, 1, 2, 3, 2}), {3});
  DoubleCoset q = coset_of({2}, sys.from_word(std::vector{1, 2, 1, 3}), {1});
  Outcome out;
  out.ok = format_element(p.min()) == "[3,4,1,2]" && max_elem(p).length() == 5 && q.min() == sys.from_word(std::vector{1, 2, 3}) &&
           is_core(p) && is_core(q) && p.left() == ParabolicSubset{1} && p.right() == ParabolicSubset{3} &&
           q.left() == ParabolicSubset{2} && q.right() == ParabolicSubset{1};
  out.detail = "p=" + to_json(p).dump() + " q=" + to_json(q).dump();
  return out;
}

Outcome nilcox() {
  Outcome out = suites({{"nilcox-relations", only(CartanType::A, 4)}, {"nilcox-relations", only(CartanType::B, 3)}});
  auto sys = CoxeterSystem::type_a(3);
  DoubleCoset q({1, 3}, sys.generator(2), {1, 3});
  bool reached = false;
  for (const auto& r : reachable_basis(sys, {1, 3})) reached = reached || r == q;
  if (reached) out.ok = false;
  out.detail += reached ? ", S4 non-core coset reached" : ", S4 non-core coset unreachable";
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"core cosets have reduced atomic rexes (A<=5, B<=3, I2(3..7))",
       [&] {
         SuiteOptions i2;
         i2.type = CartanType::I2;
         i2.max_bond = 7;
         return suites({{"core-atomic", only(CartanType::A, 5)}, {"core-atomic", only(CartanType::B, 3)}, {"core-atomic", i2}});
       }},
      {"squash is a bijection onto the small symmetric group (A<=5)",
       [] { return suites({{"squash-bijection", only(CartanType::A, 5)}}); }},
      {"atomic index words are the reduced words of the squash (A4)",
       [] { return suites({{"atomic-rex-bijection", only(CartanType::A, 4)}}); }},
      {"atomic braid moves connect all atomic rexes (A4, B3)",
       [] { return suites({{"matsumoto", only(CartanType::A, 4)}, {"matsumoto", only(CartanType::B, 3)}}); }},
      {"core compositions multiply minimal elements (A4, B3)",
       [] { return suites({{"mimimi", only(CartanType::A, 4)}, {"mimimi", only(CartanType::B, 3)}}); }},
      {"atomic self-compositions (A4, B3)",
       [] { return suites({{"atomatom", only(CartanType::A, 4)}, {"atomatom", only(CartanType::B, 3)}}); }},
      {"nilCoxeter relations, hom ranks and the unreachable S4 coset (A<=4, B<=3)", nilcox},
      {"S11 running example", running_example},
      {"S4 golden cosets", example_s4},
      {"type A redundancy (A4) and add/remove (A3, B3)",
       [] {
         return suites({{"redundancy-a", only(CartanType::A, 4)},
                        {"add-remove", only(CartanType::A, 3)},
                        {"add-remove", only(CartanType::B, 3)}});
       }},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %zu: %s [%s]\n", o.ok ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
