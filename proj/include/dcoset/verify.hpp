#pragma once

// Exhaustive verification suites. Each suite runs cell by cell, one cell per
// (system, frame J), so a failure report names where it happened.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcoset/coxeter.hpp"

namespace dcoset {

struct CellResult {
  std::string system;
  std::string frame;
  int checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<CellResult> cells;

  bool passed() const;
  int checked() const;
  int failure_count() const;
};

struct SuiteOptions {
  /// Restrict to one type; otherwise every type the suite supports.
  std::optional<CartanType> type;
  /// Largest number of simple reflections; defaults depend on suite and type.
  std::optional<int> max_rank;
  /// Largest dihedral bond m for I2(m), starting from 3.
  int max_bond = 7;
};

using CellCallback = std::function<void(const CellResult&)>;

std::vector<std::string> suite_names();
std::vector<CartanType> suite_types(const std::string& suite);
int default_max_rank(const std::string& suite, CartanType type);

/// Throws InvalidArgument for an unknown suite or an unsupported type.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options, const CellCallback& on_cell = {});

/// The systems a suite visits under the given options, in visiting order.
std::vector<CoxeterSystem> suite_systems(const std::string& suite, const SuiteOptions& options);

}  // namespace dcoset
