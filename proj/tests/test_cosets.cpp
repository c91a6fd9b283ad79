#include <gtest/gtest.h>

#include "dcoset/cosets.hpp"
#include "dcoset/errors.hpp"
#include "dcoset/expressions.hpp"
#include "oracles.hpp"

using namespace dcoset;

namespace {

std::vector<CoxeterSystem> coset_systems() {
  return {CoxeterSystem::type_a(1), CoxeterSystem::type_a(2), CoxeterSystem::type_a(3), CoxeterSystem::type_b(2),
          CoxeterSystem::type_b(3), CoxeterSystem::dihedral(3), CoxeterSystem::dihedral(5), CoxeterSystem::dihedral(6)};
}

// Simple reflections conjugated from J into W by y, as an explicit set test.
ParabolicSubset conjugated_into(const Element& y, ParabolicSubset from, ParabolicSubset into) {
  const auto& sys = y.system();
  ParabolicSubset out;
  for (int i : into.indices())
    for (int j : from.indices())
      if (y * sys.generator(j) * y.inverse() == sys.generator(i)) out = out.with(i);
  return out;
}

}  // namespace

TEST(Cosets, LongestElementIsTheLongestInTheSubgroup) {
  for (const auto& sys : coset_systems()) {
    for (ParabolicSubset s : oracle::subsets(sys)) {
      auto len = oracle::word_lengths(sys, s);
      std::set<Element> group;
      for (const auto& [w, d] : len) group.insert(w);
      auto [top, count] = oracle::extremal(group, len, true);
      EXPECT_EQ(count, 1);
      EXPECT_EQ(longest_element(sys, s), top) << sys.name() << " " << format_subset(s);
      EXPECT_EQ(parabolic_length(sys, s), len.at(top));
    }
  }
}

TEST(Cosets, EnumerationMatchesExplicitPartition) {
  for (const auto& sys : coset_systems()) {
    auto len = oracle::word_lengths(sys);
    for (ParabolicSubset left : oracle::subsets(sys)) {
      for (ParabolicSubset right : oracle::subsets(sys)) {
        auto parts = oracle::all_double_cosets(sys, left, right);
        auto cosets = enumerate_cosets(sys, left, right);
        ASSERT_EQ(cosets.size(), parts.size()) << sys.name() << " " << format_subset(left) << format_subset(right);
        for (const auto& part : parts) {
          auto [lo, nlo] = oracle::extremal(part, len, false);
          auto [hi, nhi] = oracle::extremal(part, len, true);
          EXPECT_EQ(nlo, 1);
          EXPECT_EQ(nhi, 1);
          DoubleCoset p = coset_of(left, *part.begin(), right);
          EXPECT_EQ(p.min(), lo);
          EXPECT_EQ(max_elem(p), hi);
          EXPECT_NE(std::find(cosets.begin(), cosets.end(), p), cosets.end());
          for (const auto& w : part) {
            EXPECT_TRUE(contains(p, w));
            EXPECT_EQ(coset_of(left, w, right), p);
          }
        }
      }
    }
  }
}

TEST(Cosets, EnumerationOrderIsByLengthOfMinimum) {
  auto sys = CoxeterSystem::type_a(3);
  auto cosets = enumerate_cosets(sys, ParabolicSubset{1}, ParabolicSubset{2});
  for (std::size_t k = 1; k < cosets.size(); ++k)
    EXPECT_LE(cosets[k - 1].min().length(), cosets[k].min().length());
}

TEST(Cosets, ConstructorRejectsNonMinimalRepresentatives) {
  auto sys = CoxeterSystem::type_a(2);
  EXPECT_THROW(DoubleCoset(ParabolicSubset{1}, sys.generator(1), ParabolicSubset{}), InvalidArgument);
  EXPECT_THROW(DoubleCoset(ParabolicSubset{}, sys.generator(2), ParabolicSubset{2}), InvalidArgument);
  EXPECT_NO_THROW(DoubleCoset(ParabolicSubset{1}, sys.generator(2), ParabolicSubset{1}));
}

TEST(Cosets, RedundancyMatchesConjugationByMinimum) {
  for (const auto& sys : coset_systems()) {
    for (ParabolicSubset left : oracle::subsets(sys)) {
      for (ParabolicSubset right : oracle::subsets(sys)) {
        for (const auto& p : enumerate_cosets(sys, left, right)) {
          EXPECT_EQ(left_redundancy(p), conjugated_into(p.min(), right, left));
          EXPECT_EQ(right_redundancy(p), conjugated_into(p.min().inverse(), left, right));
        }
      }
    }
  }
}

// A coset is core exactly when it has as many elements as W_I and W_J.
TEST(Cosets, CoreMatchesCosetSize) {
  for (const auto& sys : coset_systems()) {
    for (ParabolicSubset left : oracle::subsets(sys)) {
      const auto wi = oracle::subgroup(sys, left).size();
      for (ParabolicSubset right : oracle::subsets(sys)) {
        const auto wj = oracle::subgroup(sys, right).size();
        for (const auto& p : enumerate_cosets(sys, left, right)) {
          auto size = oracle::double_coset(sys, left, p.min(), right).size();
          bool core = size == wi && size == wj;
          ASSERT_EQ(is_core(p), core) << sys.name() << " " << format_subset(left) << format_element(p.min()) << format_subset(right);
          EXPECT_EQ(is_core_by_length(p), core);
        }
      }
    }
  }
}

TEST(Cosets, CoreOfACosetIsCoreWithTheSameMinimum) {
  for (const auto& sys : coset_systems()) {
    for (ParabolicSubset left : oracle::subsets(sys)) {
      for (ParabolicSubset right : oracle::subsets(sys)) {
        for (const auto& p : enumerate_cosets(sys, left, right)) {
          DoubleCoset c = core(p);
          EXPECT_TRUE(is_core(c));
          EXPECT_EQ(c.min(), p.min());
          if (is_core(p)) EXPECT_EQ(c, p);
        }
      }
    }
  }
}

TEST(Cosets, CoreEnumerationMatchesFilter) {
  for (const auto& sys : coset_systems()) {
    for (ParabolicSubset right : oracle::subsets(sys)) {
      std::set<DoubleCoset> expected;
      for (ParabolicSubset left : oracle::subsets(sys))
        for (const auto& p : enumerate_cosets(sys, left, right))
          if (is_core(p)) expected.insert(p);
      auto got = enumerate_core_cosets(sys, right);
      EXPECT_EQ(std::set(got.begin(), got.end()), expected) << sys.name() << " " << format_subset(right);
      EXPECT_EQ(got.size(), expected.size());
    }
  }
}

// In S_3 = <s,t> the core cosets are the (∅,∅)-cosets, the identity (I,I)-cosets,
// and the (s,t)- and (t,s)-cosets of the longest element.
TEST(Cosets, CoreCosetsOfS3) {
  auto sys = CoxeterSystem::type_a(2);
  Element w0 = sys.from_word(std::vector{1, 2, 1});
  std::set<DoubleCoset> expected;
  for (const auto& w : all_elements(sys)) expected.insert(coset_of({}, w, {}));
  for (ParabolicSubset s : {ParabolicSubset{1}, ParabolicSubset{2}, ParabolicSubset{1, 2}})
    expected.insert(identity_coset(sys, s));
  expected.insert(coset_of({1}, w0, {2}));
  expected.insert(coset_of({2}, w0, {1}));
  std::set<DoubleCoset> got;
  for (ParabolicSubset left : all_subsets(sys))
    for (ParabolicSubset right : all_subsets(sys))
      for (const auto& p : enumerate_cosets(sys, left, right))
        if (is_core(p)) got.insert(p);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.size(), 11u);
}

TEST(Cosets, ExampleInS4) {
  auto sys = CoxeterSystem::type_a(3);
  // s = s1, t = s2, u = s3.
  DoubleCoset p = coset_of({1}, sys.from_word(std::vector{2, 1, 2, 3, 2}), {3});
  EXPECT_EQ(max_elem(p), sys.from_word(std::vector{2, 1, 2, 3, 2}));
  EXPECT_EQ(p.min(), sys.from_word(std::vector{2, 1, 3, 2}));
  EXPECT_EQ(format_element(p.min()), "[3,4,1,2]");
  EXPECT_EQ(max_elem(p).length(), 5);
  EXPECT_TRUE(is_core(p));
  MultistepExpression ep({{1}, {1, 2}, {2}, {2, 3}, {3}});
  EXPECT_TRUE(is_reduced(sys, ep));
  EXPECT_EQ(evaluate(sys, ep), p);

  DoubleCoset q = coset_of({2}, sys.from_word(std::vector{1, 2, 1, 3}), {1});
  EXPECT_EQ(max_elem(q), sys.from_word(std::vector{1, 2, 1, 3}));
  EXPECT_EQ(q.min(), sys.from_word(std::vector{1, 2, 3}));
  EXPECT_EQ(max_elem(q).length(), 4);
  EXPECT_TRUE(is_core(q));
  MultistepExpression eq({{2}, {1, 2}, {1}, {1, 3}, {1}});
  EXPECT_TRUE(is_reduced(sys, eq));
  EXPECT_EQ(evaluate(sys, eq), q);
}

TEST(Cosets, StarCompositionAndReducedness) {
  for (const auto& sys : {CoxeterSystem::type_a(3), CoxeterSystem::type_b(2), CoxeterSystem::dihedral(4)}) {
    auto len = oracle::word_lengths(sys);
    for (ParabolicSubset i : oracle::subsets(sys)) {
      for (ParabolicSubset j : oracle::subsets(sys)) {
        const Element wj = longest_element(sys, j);
        for (ParabolicSubset k : oracle::subsets(sys)) {
          for (const auto& p : enumerate_cosets(sys, i, j)) {
            for (const auto& q : enumerate_cosets(sys, j, k)) {
              DoubleCoset r = star_compose(p, q);
              EXPECT_EQ(max_elem(r), star_product(max_elem(p), max_elem(q)));
              Element x = max_elem(p) * wj.inverse();
              bool reduced = len.at(x) + len.at(max_elem(q)) == len.at(x * max_elem(q));
              ASSERT_EQ(is_reduced_composition(p, q), reduced);
              if (reduced) EXPECT_EQ(max_elem(r), x * max_elem(q));
            }
          }
        }
      }
    }
  }
}

TEST(Cosets, CompositionRequiresMatchingFrames) {
  auto sys = CoxeterSystem::type_a(2);
  DoubleCoset p = identity_coset(sys, {1});
  DoubleCoset q = identity_coset(sys, {2});
  EXPECT_THROW(star_compose(p, q), FrameMismatch);
  EXPECT_THROW(is_reduced_composition(p, q), FrameMismatch);
  DoubleCoset other = identity_coset(CoxeterSystem::type_a(3), {1});
  EXPECT_THROW(star_compose(p, other), SystemMismatch);
}

TEST(Cosets, IdentityCosetsAreUnits) {
  auto sys = CoxeterSystem::type_b(2);
  for (ParabolicSubset i : all_subsets(sys)) {
    for (ParabolicSubset j : all_subsets(sys)) {
      for (const auto& p : enumerate_cosets(sys, i, j)) {
        EXPECT_EQ(star_compose(identity_coset(sys, i), p), p);
        EXPECT_EQ(star_compose(p, identity_coset(sys, j)), p);
        EXPECT_TRUE(is_reduced_composition(identity_coset(sys, i), p));
      }
    }
  }
}

TEST(Cosets, InversionSwapsFrames) {
  auto sys = CoxeterSystem::type_a(3);
  for (const auto& p : enumerate_cosets(sys, {1}, {2, 3})) {
    DoubleCoset q = invert(p);
    EXPECT_EQ(q.left(), p.right());
    EXPECT_EQ(q.right(), p.left());
    EXPECT_EQ(q.min(), p.min().inverse());
    EXPECT_EQ(max_elem(q), max_elem(p).inverse());
    EXPECT_EQ(invert(q), p);
  }
}

TEST(Cosets, SubsetTextRoundTrip) {
  for (ParabolicSubset s : all_subsets(CoxeterSystem::type_b(4))) EXPECT_EQ(parse_subset(format_subset(s)), s);
  EXPECT_EQ(format_subset({}), "{}");
  EXPECT_EQ(format_subset({1, 3, 4}), "{1,3,4}");
  EXPECT_EQ(parse_subset(" { 3 , 1 } "), (ParabolicSubset{1, 3}));
  EXPECT_THROW(parse_subset("{1,"), ParseError);
  EXPECT_THROW(parse_subset("1,2"), ParseError);
}
