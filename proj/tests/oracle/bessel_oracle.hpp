// Extended-precision reference evaluator for J_nu at half-integer orders.
//
// Plain ascending power series carried out in 160 decimal digits. At x = 200
// the largest term is about 1e86, so roughly 70 digits survive cancellation.
// Shares no code with the production kernel.
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <functional>
#include <stdexcept>

namespace oracle {

using Big = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<160>>;

// (x/2)^nu / Gamma(nu + 1) for nu = twice_nu / 2, built as a product.
inline Big leading_factor(int twice_nu, const Big& x) {
  const Big half_x = x / 2;
  Big factor;
  double nu0 = 0.0;
  if (twice_nu % 2 == 0) {
    factor = 1;
  } else {
    // Gamma(3/2) = sqrt(pi)/2
    factor = sqrt(half_x) * 2 / sqrt(boost::math::constants::pi<Big>());
    nu0 = 0.5;
  }
  for (int k = 1; k <= twice_nu / 2; ++k) {
    factor *= half_x / Big(nu0 + k);
  }
  return factor;
}

inline Big bessel_j(int twice_nu, const Big& x) {
  if (twice_nu < 0) throw std::invalid_argument("oracle: negative order");
  const Big nu = Big(twice_nu) / 2;
  const Big q = x * x / 4;
  Big term = 1;
  Big sum = 1;
  const Big eps("1e-150");
  for (int k = 1; k < 100000; ++k) {
    term *= -q / (Big(k) * (nu + k));
    sum += term;
    if (Big(k) > q && abs(term) < eps * abs(sum)) break;
  }
  return leading_factor(twice_nu, x) * sum;
}

inline double bessel_j(int twice_nu, double x) {
  return static_cast<double>(bessel_j(twice_nu, Big(x)));
}

// Bisection on a sign change of f over [lo, hi] to about 1e-40 relative.
inline Big bisect(const std::function<Big(const Big&)>& f, Big lo, Big hi) {
  Big flo = f(lo);
  if (flo * f(hi) > 0) throw std::invalid_argument("oracle: no sign change");
  for (int i = 0; i < 150; ++i) {
    Big mid = (lo + hi) / 2;
    Big fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

// d/dr [ r^{(2-d)/2} J_{l+d/2-1}(r) ] up to the positive factor r^{(2-d)/2},
// via the first derivative recursion: (l/r) J_nu - J_{nu+1}.
inline Big xi_prime_scaled(int l, int d, const Big& r) {
  const int twice_nu = 2 * l + d - 2;
  return Big(l) / r * bessel_j(twice_nu, r) - bessel_j(twice_nu + 2, r);
}

}  // namespace oracle
