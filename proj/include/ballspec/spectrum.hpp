#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ballspec::spectrum {

enum class BoundaryCondition { Dirichlet, Neumann };

std::string_view to_string(BoundaryCondition bc);
/// Accepts "dirichlet" / "neumann".
BoundaryCondition parse_boundary_condition(std::string_view text);

/// One eigenvalue lambda_{l,m} of the unit ball together with its block of
/// labels in the sorted spectrum (counted with multiplicity).
struct EigenvalueRecord {
  int d = 2;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  int l = 0;
  int m = 1;
  double zero = 0.0;    // alpha_{l,m} or beta_{l,m}
  double lambda = 0.0;  // zero * zero
  std::uint64_t multiplicity = 1;
  std::uint64_t label_first = 1;
  std::uint64_t label_last = 1;
};

/// All eigenvalues <= lambda_max in increasing order. Immutable once built.
struct SpectrumTable {
  int d = 2;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  double lambda_max = 0.0;
  std::vector<EigenvalueRecord> records;

  /// Eigenvalues counted with multiplicity.
  std::uint64_t count() const { return records.empty() ? 0 : records.back().label_last; }
  std::optional<EigenvalueRecord> find(int l, int m) const;
};

/// Cutoffs are inclusive up to this absolute slack.
inline constexpr double kCutoffSlack = 1e-9;

/// Lambda_{l,d} = C(l+d-1, d-1) - C(l+d-3, d-1), exact.
std::uint64_t multiplicity(int l, int d);

/// The zero alpha_{l,m}^{(d)} or beta_{l,m}^{(d)} behind lambda_{l,m}.
double radial_zero(int d, BoundaryCondition bc, int l, int m);

SpectrumTable enumerate(int d, BoundaryCondition bc, double lambda_max);

/// Smallest n with lambda_n = lambda_{l,m}.
std::uint64_t label_of(int d, BoundaryCondition bc, int l, int m);

/// Leading Weyl term (2 pi)^{-d} omega_d^2 lambda^{d/2} for the unit ball.
double weyl_count(int d, double lambda);

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

}  // namespace ballspec::spectrum
