#include <gtest/gtest.h>

#include "dcoset/errors.hpp"
#include "dcoset/io.hpp"

using namespace dcoset;
using nlohmann::json;

TEST(Io, CosetJsonGolden) {
  auto j = json::parse(R"({"cartan":"A","rank":3,"left":[1],"right":[3],"min":[3,4,1,2]})");
  DoubleCoset p = coset_from_json(j);
  EXPECT_EQ(p.system(), CoxeterSystem::type_a(3));
  EXPECT_EQ(p.left(), ParabolicSubset{1});
  EXPECT_EQ(p.right(), ParabolicSubset{3});
  EXPECT_EQ(format_element(p.min()), "[3,4,1,2]");
  EXPECT_EQ(to_json(p), j);
}

TEST(Io, CosetJsonRoundTrip) {
  for (const auto& sys : {CoxeterSystem::type_a(3), CoxeterSystem::type_b(2), CoxeterSystem::dihedral(5)}) {
    for (ParabolicSubset i : all_subsets(sys))
      for (ParabolicSubset j : all_subsets(sys))
        for (const auto& p : enumerate_cosets(sys, i, j)) {
          EXPECT_EQ(coset_from_json(json::parse(to_json(p).dump())), p);
        }
  }
  EXPECT_EQ(to_json(CoxeterSystem::dihedral(5))["bond"], 5);
}

TEST(Io, MorphismJsonRoundTrip) {
  auto sys = CoxeterSystem::type_a(3);
  ParabolicSubset j{2};
  ADMorphism f = ADMorphism::zero(sys, j, j);
  for (const auto& p : ad_basis(sys, j))
    if (p.left() == j) f += 5 * ADMorphism::basis(p);
  json out = to_json(f);
  ASSERT_TRUE(out.is_array());
  EXPECT_EQ(out.size(), f.terms().size());
  EXPECT_EQ(out[0]["coefficient"], 5);
  EXPECT_EQ(morphism_from_json(sys, j, j, json::parse(out.dump())), f);
  EXPECT_EQ(to_json(ADMorphism::zero(sys, j, j)), json::array());
}

TEST(Io, RejectsBadJson) {
  EXPECT_THROW(coset_from_json(json::parse(R"({"cartan":"A","rank":3,"left":[1],"right":[3]})")), InvalidArgument);
  EXPECT_THROW(coset_from_json(json::parse(R"({"cartan":"Q","rank":3,"left":[],"right":[],"min":[1,2,3,4]})")), Error);
  EXPECT_THROW(coset_from_json(json::parse(R"({"cartan":"A","rank":3,"left":[1],"right":[3],"min":[4,3,2,1]})")), InvalidArgument);
  EXPECT_THROW(coset_from_json(json::parse(R"({"cartan":"A","rank":3,"left":[7],"right":[],"min":[1,2,3,4]})")), InvalidArgument);
  EXPECT_THROW(coset_from_json(json::parse(R"({"cartan":"A","rank":"x","left":[],"right":[],"min":[1]})")), InvalidArgument);
  EXPECT_THROW(subset_from_json(json::parse(R"([1,"a"])")), InvalidArgument);
}
