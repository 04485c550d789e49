#include "ballspec/pleijel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ballspec/bessel.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/parallel.hpp"
#include "ballspec/zeros.hpp"

namespace ballspec::pleijel {
namespace {

void check_dimension(int d) {
  if (d < 2 || d > kMaxDimension) {
    throw RangeError("pleijel", "dimension " + std::to_string(d) + " outside [2, 240]");
  }
}

// First positive zero of J_{twice/2}.
double first_zero(int twice_nu) { return zeros::bessel_zero(Order::from_twice(twice_nu), 1); }

double gamma_fn_ratio(double a, double b) {
  return std::exp(bessel::log_gamma(a) - bessel::log_gamma(b));
}

Inequality exact_less(std::string name, const BigRational& lhs, const BigRational& rhs) {
  Inequality q;
  q.name = std::move(name);
  q.lhs = lhs.convert_to<double>();
  q.rhs = rhs.convert_to<double>();
  q.exact = true;
  q.holds = lhs < rhs;
  return q;
}

}  // namespace

bool MonotonicityCertificate::all_hold() const {
  return poly_factorization_exact && poly_spot_value == BigRational(-59, 64) &&
         std::all_of(checks.begin(), checks.end(), [](const Inequality& q) { return q.holds; });
}

double log_gamma_constant(int d) {
  check_dimension(d);
  const double j = first_zero(d - 2);
  return (d - 2) * std::numbers::ln2 + 2 * std::log(static_cast<double>(d)) +
         2 * bessel::log_gamma(0.5 * d) - d * std::log(j);
}

double gamma(int d) { return std::exp(log_gamma_constant(d)); }

std::vector<PleijelRow> gamma_table(int d_min, int d_max) {
  if (d_min > d_max) throw InvalidArgument("pleijel", "d_min must not exceed d_max");
  check_dimension(d_min);
  check_dimension(d_max);
  const auto n = static_cast<std::size_t>(d_max - d_min + 1);
  std::vector<PleijelRow> rows(n);
  parallel_for(n, [&](std::size_t i) {
    const int d = d_min + static_cast<int>(i);
    const double lg = log_gamma_constant(d);
    rows[i] = {d, std::exp(lg), lg, std::nullopt};
  });
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rows[i].quotient_next = std::exp(rows[i + 1].log_gamma_value - rows[i].log_gamma_value);
  }
  return rows;
}

std::vector<std::pair<int, double>> quotient_curve(int d_min, int d_max) {
  check_dimension(d_max + 1);
  const auto rows = gamma_table(d_min, d_max + 1);
  std::vector<std::pair<int, double>> out;
  out.reserve(rows.size() - 1);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double q = *rows[i].quotient_next;
    if (!(q < 1.0)) {
      throw CertificateFailure("pleijel", "gamma(" + std::to_string(rows[i].d + 1) + ")/gamma(" +
                                              std::to_string(rows[i].d) + ") is not below 1");
    }
    out.emplace_back(rows[i].d, q);
  }
  return out;
}

MonotonicityCertificate monotonicity_certificate(int d) {
  if (d < 4) throw InvalidArgument("pleijel", "the monotonicity chain needs d >= 4");
  check_dimension(d + 1);
  MonotonicityCertificate cert;
  cert.d = d;
  auto& c = cert.checks;
  const double x = d;
  const double a = 0.5 * x;

  // Log-convexity of Gamma and its consequence.
  c.push_back(strictly_less("gamma_ratio_bound", gamma_fn_ratio(a - 0.5, a), 1 / std::sqrt(a - 1)));
  const double g_ratio = gamma_fn_ratio(a + 0.5, a);
  c.push_back(strictly_less("gamma_eq", g_ratio * g_ratio, (x - 1) * (x - 1) / (2 * (x - 2))));

  // Zeros j_{nu,1} at nu = d/2 - 3/2, d/2 - 1, d/2 - 1/2, d/2 - 1/2 (the
  // last two coincide: (d-1)/2 = d/2 - 1/2).
  const double j_m32 = first_zero(d - 3);
  const double j_m1 = first_zero(d - 2);
  const double j_m12 = first_zero(d - 1);

  // Ashbaugh-Benguria with the cube, dimension d - 1.
  c.push_back(strictly_less("asb", j_m32 / j_m12, std::sqrt(1 - 3 / (x + 2))));
  // Convexity of nu -> j_{nu,1}^2, centred at d/2 - 1.
  const double ratio_sq = (j_m1 * j_m1) / (j_m12 * j_m12);
  const double halfway = 0.5 * ((j_m32 * j_m32) / (j_m12 * j_m12) + 1);
  c.push_back(strictly_less("jinter", ratio_sq, halfway));
  c.push_back(strictly_less("control", ratio_sq, 1 - 3 / (2 * (x + 2))));

  c.push_back(strictly_less("bessel_lower", std::sqrt((a - 0.5) * (a + 1.5)), j_m12));

  const double quotient = std::exp(log_gamma_constant(d + 1) - log_gamma_constant(d));
  const double base = 1 - 3 / (2 * (x + 2));
  const double chain = 2 / std::sqrt((x - 1) * (x + 3)) * (x + 1) * (x + 1) / (x * x) *
                       (x - 1) * (x - 1) / (x - 2) * std::pow(base, a);
  c.push_back(strictly_less("quotient_bound", quotient, chain));
  c.push_back(strictly_less("exp_bound", std::pow(base, a + 1), std::exp(-0.75)));

  // Rational parts, decided exactly.
  const BigRational dr(d);
  const BigRational half(1, 2);
  c.push_back(exact_less("product_bound", (dr + half) * (dr + half), (dr - 1) * (dr + 3)));
  const BigRational poly = (dr + 1) * (dr + 1) / (dr * dr) * (dr - 1) * (dr - 1) / (dr - 2) *
                           (dr + 2) / ((dr + half) * (dr + half));
  const BigRational one_plus = 1 + BigRational(5) / dr;
  c.push_back(exact_less("poly_bound", poly, one_plus));
  const BigRational numerator = -8 * dr * dr * dr * dr + 19 * dr * dr * dr + 21 * dr * dr + 14 * dr + 8;
  cert.poly_factorization_exact =
      poly - one_plus == numerator / (4 * (dr - 2) * dr * dr * (dr + half) * (dr + half));
  c.push_back(exact_less("poly_numerator_negative", numerator, BigRational(0)));
  const BigRational paper_poly = -4 + BigRational(39) / (dr * dr) + BigRational(41) / (dr * dr * dr);
  c.push_back(exact_less("poly_majorant_negative", paper_poly, BigRational(0)));
  const BigRational four(4);
  cert.poly_spot_value = -4 + BigRational(39) / (four * four) + BigRational(41) / (four * four * four);

  c.push_back(strictly_less("const_bound", 2 * std::exp(-0.75), 0.95));
  cert.final_bound_exact = BigRational(95, 100) * one_plus;
  c.push_back(strictly_less("final_bound", quotient, cert.final_bound_exact.convert_to<double>()));
  c.push_back(strictly_less("final_lt_1", quotient, 1.0));

  require_all("pleijel", c);
  if (!cert.poly_factorization_exact) {
    throw CertificateFailure("pleijel", "polynomial factorization does not hold exactly");
  }
  if (cert.poly_spot_value != BigRational(-59, 64)) {
    throw CertificateFailure("pleijel", "-4 + 39/d^2 + 41/d^3 at d = 4 is not -59/64");
  }
  return cert;
}

double neumann_pleijel_bound(int d) {
  if (d < 3) throw InvalidArgument("pleijel", "the Neumann bound needs d >= 3");
  const double below = gamma(d - 1);
  const double here = gamma(d);
  if (!(here < below)) {
    throw CertificateFailure("pleijel", "gamma(" + std::to_string(d) + ") is not below gamma(" +
                                            std::to_string(d - 1) + ")");
  }
  return below;
}

}  // namespace ballspec::pleijel
