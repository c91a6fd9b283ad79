#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's length, descent, coset or Bruhat code: lengths come from a
// breadth-first search of the Cayley graph, cosets from explicit products.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "dcoset/coxeter.hpp"

namespace oracle {

using dcoset::CoxeterSystem;
using dcoset::Element;
using dcoset::ParabolicSubset;

/// Word length of every element of W_I, by BFS over right multiplication.
inline std::map<Element, int> word_lengths(const CoxeterSystem& system, ParabolicSubset subset) {
  std::map<Element, int> dist{{system.identity(), 0}};
  std::deque<Element> queue{system.identity()};
  while (!queue.empty()) {
    Element w = queue.front();
    queue.pop_front();
    for (int i : subset.indices()) {
      Element next = w * system.generator(i);
      if (dist.emplace(next, dist[w] + 1).second) queue.push_back(next);
    }
  }
  return dist;
}

inline std::map<Element, int> word_lengths(const CoxeterSystem& system) {
  return word_lengths(system, system.all_simples());
}

inline std::vector<Element> subgroup(const CoxeterSystem& system, ParabolicSubset subset) {
  std::vector<Element> out;
  for (const auto& [w, d] : word_lengths(system, subset)) out.push_back(w);
  return out;
}

/// W_I w W_J as an explicit set.
inline std::set<Element> double_coset(const CoxeterSystem& system, ParabolicSubset left, const Element& w,
                                      ParabolicSubset right) {
  std::set<Element> out;
  for (const auto& u : subgroup(system, left))
    for (const auto& v : subgroup(system, right)) out.insert(u * w * v);
  return out;
}

/// Partition of W into (I,J)-double cosets.
inline std::vector<std::set<Element>> all_double_cosets(const CoxeterSystem& system, ParabolicSubset left,
                                                        ParabolicSubset right) {
  std::vector<std::set<Element>> out;
  std::set<Element> seen;
  for (const auto& [w, d] : word_lengths(system)) {
    if (seen.count(w)) continue;
    auto c = double_coset(system, left, w, right);
    seen.insert(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

/// Element of extremal length in a set, with the number of elements attaining it.
inline std::pair<Element, int> extremal(const std::set<Element>& c, const std::map<Element, int>& len, bool longest) {
  const Element* best = nullptr;
  int count = 0;
  for (const auto& w : c) {
    if (!best || (longest ? len.at(w) > len.at(*best) : len.at(w) < len.at(*best))) {
      best = &w;
      count = 1;
    } else if (len.at(w) == len.at(*best)) {
      ++count;
    }
  }
  return {*best, count};
}

/// Every reduced word of w, by descending along length-decreasing right multiplications.
inline std::set<std::vector<int>> reduced_words(const Element& w, const std::map<Element, int>& len) {
  if (len.at(w) == 0) return {{}};
  std::set<std::vector<int>> out;
  for (int i : w.system().indices()) {
    Element shorter = w * w.system().generator(i);
    if (len.at(shorter) >= len.at(w)) continue;
    for (auto word : reduced_words(shorter, len)) {
      word.push_back(i);
      out.insert(std::move(word));
    }
  }
  return out;
}

/// Bruhat order in S_n by the tableau criterion on one-line notation.
inline bool bruhat_tableau(const Element& u, const Element& v) {
  const auto a = u.images();
  const auto b = v.images();
  for (std::size_t k = 1; k <= a.size(); ++k) {
    std::vector<int> x(a.begin(), a.begin() + k), y(b.begin(), b.begin() + k);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] > y[i]) return false;
  }
  return true;
}

/// All subsets of the simple reflections, built from the index list.
inline std::vector<ParabolicSubset> subsets(const CoxeterSystem& system) {
  std::vector<ParabolicSubset> out{ParabolicSubset{}};
  for (int i : system.indices()) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) out.push_back(out[k].with(i));
  }
  return out;
}

inline std::uint64_t factorial(int k) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace oracle
