#pragma once

// Extended-precision entry points shared by the root finders. Not part of
// the public surface.

#include <limits>

#include "ballspec/order.hpp"

namespace ballspec::bessel::detail {

using real = long double;
static_assert(std::numeric_limits<real>::digits >= 64,
              "the Bessel kernel needs an extended-precision long double");

struct PairValue {
  real j = 0;           // J_nu(x)
  real j_next = 0;      // J_{nu+1}(x)
  real abs_err = 0;     // estimated absolute error of j
  real abs_err_next = 0;
};

/// No range checks beyond x > 0; callers validate.
PairValue j_pair(int twice_nu, real x);

real log_gamma_ext(real x);

}  // namespace ballspec::bessel::detail
