#pragma once

#include <utility>

#include "ballspec/order.hpp"

namespace ballspec::bessel {

/// Supported evaluation box: 0 < x <= kMaxArgument, 0 <= nu <= kMaxOrder.
inline constexpr double kMaxArgument = 200.0;
inline constexpr double kMaxOrder = 120.0;

/// Accuracy contract. Errors are measured relative to
/// max(|J|, kNearZeroFloor * envelope(x)) where envelope(x) = min(1, sqrt(2/(pi x)))
/// is the oscillation amplitude, so values close to a zero of J carry an
/// absolute error bound instead of a meaningless relative one.
inline constexpr double kContractRelErr = 1e-12;
inline constexpr double kNearZeroFloor = 1e-3;

struct EvalResult {
  double value = 0.0;
  double est_rel_err = 0.0;
};

/// J_nu(x). Throws RangeError outside the box or when the result underflows
/// the double range, LossOfPrecision when the error estimate exceeds the
/// contract.
EvalResult eval_J(Order nu, double x);

/// (J_nu(x), J_{nu+1}(x)) from a single evaluation sweep.
std::pair<EvalResult, EvalResult> eval_J_pair(Order nu, double x);

/// J'_nu(x) = (nu/x) J_nu(x) - J_{nu+1}(x).
EvalResult eval_J_prime(Order nu, double x);

/// Xi_l^{(d)}(r) = r^{(2-d)/2} J_{l+d/2-1}(r).
EvalResult eval_Xi(int l, int d, double r);

/// d/dr Xi_l^{(d)}(r) = (l/r) Xi_l(r) - Xi_{l+1}(r).
EvalResult eval_Xi_prime(int l, int d, double r);

/// ln Gamma(x) for 0 < x <= 1e6; relative error below 1e-13 on [0.5, 200].
double log_gamma(double x);

double envelope(double x);

}  // namespace ballspec::bessel
