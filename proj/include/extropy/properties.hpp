#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "extropy/distributions.hpp"

namespace extropy {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first violation, or a short summary on success
};

struct PropertyOptions {
  std::uint64_t reps = 100000;  // Monte Carlo replications for the table checks
  std::uint64_t seed = 20230101;
  unsigned workers = 0;  // 0 selects default_worker_count()
};

// Distributions every analytic invariant is checked on.
std::vector<BoundedDistribution> property_catalog();

// Runs the invariant suite in a fixed order. `on_result`, if set, is invoked
// as each check finishes.
std::vector<PropertyResult> verify_properties(
    const PropertyOptions& options = {},
    const std::function<void(const PropertyResult&)>& on_result = {});

}  // namespace extropy
