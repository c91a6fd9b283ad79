#include "dcoset/io.hpp"

#include "dcoset/errors.hpp"

namespace dcoset {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json to_json(const CoxeterSystem& system) {
  json j{{"cartan", to_string(system.cartan())}, {"rank", system.rank()}};
  if (system.cartan() == CartanType::I2) j["bond"] = system.bond();
  return j;
}

CoxeterSystem system_from_json(const json& j) {
  CartanType type = parse_cartan(field<std::string>(j, "cartan"));
  switch (type) {
    case CartanType::A:
      return CoxeterSystem::type_a(field<int>(j, "rank"));
    case CartanType::B:
      return CoxeterSystem::type_b(field<int>(j, "rank"));
    case CartanType::I2:
      if (j.contains("rank") && field<int>(j, "rank") != 2) throw InvalidArgument("I2 has rank 2");
      return CoxeterSystem::dihedral(field<int>(j, "bond"));
  }
  throw InvalidArgument("unknown Cartan type");
}

json to_json(ParabolicSubset subset) { return subset.indices(); }

ParabolicSubset subset_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("subset must be a list of indices");
  std::vector<int> indices;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidArgument("subset entries must be integers");
    indices.push_back(x.get<int>());
  }
  return ParabolicSubset(indices);
}

json to_json(const DoubleCoset& p) {
  json j = to_json(p.system());
  j["left"] = to_json(p.left());
  j["right"] = to_json(p.right());
  j["min"] = std::vector<int>(p.min().images().begin(), p.min().images().end());
  return j;
}

DoubleCoset coset_from_json(const json& j) {
  CoxeterSystem system = system_from_json(j);
  ParabolicSubset left = subset_from_json(field<json>(j, "left"));
  ParabolicSubset right = subset_from_json(field<json>(j, "right"));
  if (!system.valid_subset(left) || !system.valid_subset(right))
    throw InvalidArgument("frame outside the simple reflections of " + system.name());
  return DoubleCoset(left, Element(system, field<std::vector<int>>(j, "min")), right);
}

json to_json(const ADMorphism& f) {
  json out = json::array();
  for (const auto& [p, k] : f.terms()) out.push_back({{"coset", to_json(p)}, {"coefficient", k}});
  return out;
}

ADMorphism morphism_from_json(const CoxeterSystem& system, ParabolicSubset source, ParabolicSubset target,
                              const json& j) {
  if (!j.is_array()) throw InvalidArgument("morphism must be a list of terms");
  ADMorphism out = ADMorphism::zero(system, source, target);
  for (const auto& term : j) {
    DoubleCoset p = coset_from_json(field<json>(term, "coset"));
    if (p.system() != system) throw SystemMismatch("term from " + p.system().name());
    out += field<std::int64_t>(term, "coefficient") * ADMorphism::basis(p);
  }
  return out;
}

}  // namespace dcoset
