#pragma once

#include <vector>

#include "ballspec/order.hpp"

namespace ballspec::zeros {

inline constexpr double kDefaultTol = 1e-13;
inline constexpr double kDefaultStep = 0.2;

enum class RootKind { BesselJ, DirichletXi, NeumannXiPrime };

/// Identifies one zero. For BesselJ the order is l + d/2 - 1, exactly as for
/// the Xi kinds, so every half-integer order is reachable.
struct RootRequest {
  RootKind kind = RootKind::BesselJ;
  int l = 0;
  int d = 2;
  int m = 1;
  double tol = kDefaultTol;
};

/// A sign-change interval, lo < hi.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// m-th positive zero j_{nu,m} of J_nu. The census scans from the origin, so
/// the index is guaranteed, not just the location.
double bessel_zero(Order nu, int m, double tol = kDefaultTol);

/// m-th positive zero alpha_{l,m}^{(d)} of Xi_l^{(d)}.
double dirichlet_zero(int l, int d, int m, double tol = kDefaultTol);

/// m-th zero beta_{l,m}^{(d)} of d/dr Xi_l^{(d)}; beta_{0,1} = 0.
double neumann_zero(int l, int d, int m, double tol = kDefaultTol);

double find_zero(const RootRequest& request);

/// Sign-change brackets of the target function over (0, x_max], one per
/// zero. Throws StepTooCoarse when a cell appears to hold two zeros.
std::vector<Bracket> scan_brackets(RootKind kind, int l, int d, double x_max,
                                   double step = kDefaultStep);

/// Every positive zero in (0, x_max], refined to `tol`, in increasing order.
/// The step is halved automatically on StepTooCoarse. For NeumannXiPrime with
/// l = 0 the conventional zero at the origin is not included.
std::vector<double> zeros_up_to(RootKind kind, int l, int d, double x_max,
                                double tol = kDefaultTol);

/// Positive number below which the target has no zeros.
double zero_free_below(RootKind kind, int l, int d);

}  // namespace ballspec::zeros
