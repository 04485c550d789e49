#pragma once

#include <string>
#include <vector>

namespace ballspec {

/// A named strict inequality lhs < rhs with both sides evaluated.
struct Inequality {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Set when the comparison was decided in exact arithmetic rather than
  /// from the two doubles.
  bool exact = false;
  bool holds = false;

  double margin() const { return rhs - lhs; }
};

/// Builds an inequality decided from the doubles.
Inequality strictly_less(std::string name, double lhs, double rhs);

/// Throws CertificateFailure naming the first inequality that does not hold.
void require_all(const std::string& module, const std::vector<Inequality>& checks);

}  // namespace ballspec
