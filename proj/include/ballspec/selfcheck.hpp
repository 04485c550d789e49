#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ballspec/order.hpp"

namespace ballspec::selfcheck {

/// Evaluates J_nu(x); lets a harness substitute a perturbed kernel.
using JEvaluator = std::function<double(Order, double)>;

struct Config {
  bool fast = false;
  /// Empty means the library kernel.
  JEvaluator j_eval;
};

struct Outcome {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Report {
  std::vector<Outcome> outcomes;

  bool passed() const;
  /// Null when everything passed.
  const Outcome* first_failure() const;
};

/// Runs the invariant suite in a fixed order; the kernel residual checks come
/// first. Each check records its own failure instead of throwing.
Report run(const Config& config);

}  // namespace ballspec::selfcheck
