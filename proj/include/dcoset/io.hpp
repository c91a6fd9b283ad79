#pragma once

// JSON forms of systems, cosets and AD morphisms.
//   coset: {"cartan":"A","rank":3,"left":[1],"right":[3],"min":[3,4,1,2]}
// I2 cosets carry an extra "bond" field.

#include <json.hpp>

#include "dcoset/nilcox.hpp"

namespace dcoset {

nlohmann::json to_json(const CoxeterSystem& system);
CoxeterSystem system_from_json(const nlohmann::json& j);

nlohmann::json to_json(ParabolicSubset subset);
ParabolicSubset subset_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DoubleCoset& p);
DoubleCoset coset_from_json(const nlohmann::json& j);

/// A list of {"coset": ..., "coefficient": k}, in basis order.
nlohmann::json to_json(const ADMorphism& f);
ADMorphism morphism_from_json(const CoxeterSystem& system, ParabolicSubset source, ParabolicSubset target,
                              const nlohmann::json& j);

}  // namespace dcoset
