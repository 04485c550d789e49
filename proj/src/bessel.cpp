#include "ballspec/bessel.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ballspec/detail/bessel_kernel.hpp"

namespace ballspec {

Order Order::from_value(double nu) {
  const double twice = 2.0 * nu;
  const double rounded = std::round(twice);
  if (!std::isfinite(nu) || rounded != twice || nu < 0.0 || twice > 1e6) {
    throw InvalidArgument("bessel", "order must be a non-negative integer or half-integer");
  }
  return from_twice(static_cast<int>(rounded));
}

std::string Order::to_string() const {
  if (twice_nu_ % 2 == 0) return std::to_string(twice_nu_ / 2);
  return std::to_string(twice_nu_) + "/2";
}

namespace bessel {
namespace detail {
namespace {

constexpr real kEps = std::numeric_limits<real>::epsilon();
constexpr real kPi = std::numbers::pi_v<real>;

// Neumaier-compensated running sum.
struct CompensatedSum {
  real sum = 0;
  real carry = 0;
  void add(real v) {
    const real t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  real value() const { return sum + carry; }
};

// (x/2)^nu / Gamma(nu + 1), accumulated as a product so half-integer orders
// need no Gamma evaluation.
real leading_factor(int twice_nu, real x) {
  const real half_x = x / 2;
  real factor;
  real nu0;
  if (twice_nu % 2 == 0) {
    factor = 1;
    nu0 = 0;
  } else {
    factor = 2 * std::sqrt(half_x / kPi);  // (x/2)^{1/2} / Gamma(3/2)
    nu0 = 0.5L;
  }
  for (int k = 1; k <= twice_nu / 2; ++k) factor *= half_x / (nu0 + k);
  return factor;
}

struct SeriesValue {
  real value;
  real abs_err;
};

// Ascending series sum_k (-x^2/4)^k / (k! (nu+1)_k) times the leading factor.
SeriesValue series(int twice_nu, real x, real lead) {
  const real nu = twice_nu / real(2);
  const real q = x * x / 4;
  real term = 1;
  real magnitude = 1;
  CompensatedSum sum;
  sum.add(1);
  int k = 1;
  for (; k < 2000; ++k) {
    term *= -q / (k * (nu + k));
    sum.add(term);
    magnitude += std::fabs(term);
    if (k > q && std::fabs(term) < kEps * 1e-3L * std::fabs(sum.value())) break;
  }
  const real s = sum.value();
  // Each term carries O(k) roundings; the leading factor O(nu).
  const real err = kEps * (4 * magnitude + (nu + 4) * std::fabs(s)) * std::fabs(lead);
  return {lead * s, err};
}

constexpr std::size_t kMaxRecurrence = 512;

PairValue miller(int twice_nu, real x) {
  const bool half = twice_nu % 2 != 0;
  const real nu0 = half ? 0.5L : 0.0L;
  // Offsets k address order nu0 + k; `top` is the offset of nu + 1.
  const int top = (twice_nu - (half ? 1 : 0)) / 2 + 1;
  const real reach = std::max<real>(x, nu0 + top);
  int start = static_cast<int>(std::ceil(reach + 16 * std::cbrt(reach) + 20));
  start += start % 2;
  if (static_cast<std::size_t>(start) + 2 > kMaxRecurrence) {
    throw RangeError("bessel", "recurrence depth exceeds the supported box");
  }

  std::array<real, kMaxRecurrence> f{};
  f[start + 1] = 0;
  f[start] = 1e-300L;
  for (int k = start; k >= 1; --k) {
    f[k - 1] = 2 * (nu0 + k) / x * f[k] - f[k + 1];
    if (std::fabs(f[k - 1]) > 1e600L) {
      for (int i = k - 1; i <= start; ++i) f[i] *= 1e-600L;
    }
  }

  real scale;
  if (half) {
    // Fit against J_{1/2} = s sin x and J_{-1/2} = s cos x jointly so the
    // scale stays well conditioned near zeros of either one.
    const real below = f[0] / x - f[1];
    const real s = std::sqrt(2 / (kPi * x));
    const real a = s * std::sin(x);
    const real b = s * std::cos(x);
    scale = (f[0] * a + below * b) / (f[0] * f[0] + below * below);
  } else {
    // 1 = J_0 + 2 sum_{k>=1} J_{2k}
    CompensatedSum norm;
    for (int k = start; k >= 2; k -= 2) norm.add(2 * f[k]);
    norm.add(f[0]);
    scale = 1 / norm.value();
  }

  const real env = std::min<real>(1, std::sqrt(2 / (kPi * x)));
  const real per_step = 8 * kEps * std::sqrt(static_cast<real>(start));
  PairValue out;
  out.j = f[top - 1] * scale;
  out.j_next = f[top] * scale;
  out.abs_err = per_step * (std::fabs(out.j) + env);
  out.abs_err_next = per_step * (std::fabs(out.j_next) + env);
  return out;
}

bool use_series(int twice_nu, real x) {
  // Terms of the series peak at about exp(x^2 / (4 (nu+1))) relative to the
  // sum; past x^2/4 = nu+1 the error bound grows faster than Miller's.
  const real nu = twice_nu / real(2);
  return x * x / 4 <= nu + 1;
}

}  // namespace

PairValue j_pair(int twice_nu, real x) {
  if (x < 1e-8L) {
    // Leading term only; the first correction is below x^2/4 < 1e-16.
    const real lead = leading_factor(twice_nu, x);
    const real lead_next = lead * (x / 2) / (twice_nu / real(2) + 1);
    const real nu = twice_nu / real(2);
    const real corr = x * x / (4 * (nu + 1));
    const real corr_next = x * x / (4 * (nu + 2));
    PairValue out;
    out.j = lead * (1 - corr);
    out.j_next = lead_next * (1 - corr_next);
    out.abs_err = (nu + 4) * kEps * std::fabs(out.j);
    out.abs_err_next = (nu + 5) * kEps * std::fabs(out.j_next);
    return out;
  }
  if (use_series(twice_nu, x)) {
    const real lead = leading_factor(twice_nu, x);
    const real lead_next = lead * (x / 2) / (twice_nu / real(2) + 1);
    const auto a = series(twice_nu, x, lead);
    const auto b = series(twice_nu + 2, x, lead_next);
    return {a.value, b.value, a.abs_err, b.abs_err};
  }
  return miller(twice_nu, x);
}

namespace {

// lnGamma(1 + e) = -euler*e + sum_{k>=2} (-1)^k zeta(k)/k e^k, |e| <= 1/4.
constexpr std::array<real, 38> kZeta = {
    1.644934066848226436472415L, 1.202056903159594285399738L,
    1.082323233711138191516004L, 1.036927755143369926331365L,
    1.017343061984449139714518L, 1.008349277381922826839798L,
    1.004077356197944339378685L, 1.002008392826082214417853L,
    1.000994575127818085337146L, 1.000494188604119464558702L,
    1.000246086553308048298638L, 1.000122713347578489146752L,
    1.000061248135058704829259L, 1.000030588236307020493552L,
    1.000015282259408651871733L, 1.000007637197637899762274L,
    1.000003817293264999839856L, 1.000001908212716553938926L,
    1.000000953962033872796113L, 1.000000476932986787806463L,
    1.000000238450502727732990L, 1.000000119219925965311073L,
    1.000000059608189051259480L, 1.000000029803503514652280L,
    1.000000014901554828365041L, 1.000000007450711789835429L,
    1.000000003725334024788457L, 1.000000001862659723513049L,
    1.000000000931327432419668L, 1.000000000465662906503378L,
    1.000000000232831183367651L, 1.000000000116415501727005L,
    1.000000000058207720879027L, 1.000000000029103850444971L,
    1.000000000014551921891042L, 1.000000000007275959835057L,
    1.000000000003637979547379L, 1.000000000001818989650307L};
constexpr real kEulerGamma = 0.5772156649015328606065120900824024L;

real log_gamma_one_plus(real e) {
  real sum = -kEulerGamma * e;
  real power = -e;  // (-e)^k
  for (std::size_t i = 0; i < kZeta.size(); ++i) {
    power *= -e;
    const int k = static_cast<int>(i) + 2;
    sum += kZeta[i] / k * power;
  }
  return sum;
}

real stirling(real z) {
  // Bernoulli numbers B_2 .. B_16.
  constexpr std::array<real, 8> kB = {1.0L / 6,       -1.0L / 30,  1.0L / 42,
                                      -1.0L / 30,     5.0L / 66,   -691.0L / 2730,
                                      7.0L / 6,       -3617.0L / 510};
  real tail = 0;
  const real inv = 1 / z;
  const real inv2 = inv * inv;
  real p = inv;
  for (std::size_t i = 0; i < kB.size(); ++i) {
    const int n = 2 * static_cast<int>(i) + 2;
    tail += kB[i] / (n * (n - 1)) * p;
    p *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * kPi) + tail;
}

}  // namespace

real log_gamma_ext(real x) {
  if (x == std::floor(x) && x <= 30) {
    real fact = 1;
    for (int k = 2; k < static_cast<int>(x); ++k) fact *= k;
    return std::log(fact);
  }
  if (std::fabs(x - 1) <= 0.25L) return log_gamma_one_plus(x - 1);
  if (std::fabs(x - 2) <= 0.25L) return log_gamma_one_plus(x - 2) + std::log1p(x - 2);
  real z = x;
  real product = 1;
  while (z < 10) {
    product *= z;
    z += 1;
  }
  return stirling(z) - std::log(product);
}

}  // namespace detail

namespace {

using detail::real;

void check_box(Order nu, double x) {
  if (!(x > 0.0) || !(x <= kMaxArgument)) {
    std::ostringstream os;
    os << "argument x = " << x << " outside (0, " << kMaxArgument << "]";
    throw RangeError("bessel", os.str());
  }
  if (nu.value() > kMaxOrder) {
    throw RangeError("bessel", "order " + nu.to_string() + " exceeds the supported maximum 120");
  }
}

EvalResult finish(real value, real abs_err, double x, const char* what) {
  const double v = static_cast<double>(value);
  if (value != 0 && std::fabs(v) < std::numeric_limits<double>::min()) {
    throw RangeError("bessel", std::string(what) + " underflows the double range");
  }
  const real floor = kNearZeroFloor * envelope(x);
  const real rel = abs_err / std::max<real>(std::fabs(value), floor) +
                   std::numeric_limits<double>::epsilon() / 2;
  if (rel > kContractRelErr) {
    throw LossOfPrecision("bessel", std::string(what) + ": error estimate exceeds 1e-12");
  }
  return {v, static_cast<double>(rel)};
}

}  // namespace

double envelope(double x) { return std::min(1.0, std::sqrt(2.0 / (std::numbers::pi * x))); }

EvalResult eval_J(Order nu, double x) {
  check_box(nu, x);
  const auto p = detail::j_pair(nu.twice(), x);
  return finish(p.j, p.abs_err, x, "J_nu");
}

std::pair<EvalResult, EvalResult> eval_J_pair(Order nu, double x) {
  check_box(nu, x);
  const auto p = detail::j_pair(nu.twice(), x);
  return {finish(p.j, p.abs_err, x, "J_nu"), finish(p.j_next, p.abs_err_next, x, "J_{nu+1}")};
}

EvalResult eval_J_prime(Order nu, double x) {
  check_box(nu, x);
  const auto p = detail::j_pair(nu.twice(), x);
  const real nu_r = nu.twice() / real(2);
  const real value = nu_r / x * p.j - p.j_next;
  const real err = nu_r / x * p.abs_err + p.abs_err_next;
  return finish(value, err, x, "J'_nu");
}

EvalResult eval_Xi(int l, int d, double r) {
  const Order nu = Order::for_ball(l, d);
  check_box(nu, r);
  const auto p = detail::j_pair(nu.twice(), r);
  const real scale = std::pow(static_cast<real>(r), (2 - d) / real(2));
  // Relative error is invariant under the positive prefactor; the near-zero
  // floor is applied on the J scale before rescaling.
  const auto j = finish(p.j, p.abs_err, r, "Xi");
  return {static_cast<double>(scale * p.j), j.est_rel_err};
}

EvalResult eval_Xi_prime(int l, int d, double r) {
  const Order nu = Order::for_ball(l, d);
  check_box(nu, r);
  const auto p = detail::j_pair(nu.twice(), r);
  const real scale = std::pow(static_cast<real>(r), (2 - d) / real(2));
  const real inner = static_cast<real>(l) / r * p.j - p.j_next;
  const real err = static_cast<real>(l) / r * p.abs_err + p.abs_err_next;
  const auto checked = finish(inner, err, r, "Xi'");
  return {static_cast<double>(scale * inner), checked.est_rel_err};
}

double log_gamma(double x) {
  if (!(x > 0.0) || !(x <= 1e6)) {
    throw RangeError("bessel", "log_gamma argument outside (0, 1e6]");
  }
  return static_cast<double>(detail::log_gamma_ext(x));
}

}  // namespace bessel
}  // namespace ballspec
