#pragma once

#include <cstdint>

#include "render.hpp"
#include "trilocal/t_ring.hpp"

namespace trilocal::cli {

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 200;
  std::size_t budget = kDefaultBudget;
  /// Runs the fixtures against deliberately broken constructions.
  bool inject_fault = false;
};

/// Fixed fixtures for every shipped family; each check carries its expected value.
Json run_fixture_suite(const SuiteOptions& opts);
/// Seeded property suites; restricted to one family when `only` is set.
Json run_random_suite(const SuiteOptions& opts, const FamilyPtr& only = nullptr);

}  // namespace trilocal::cli
