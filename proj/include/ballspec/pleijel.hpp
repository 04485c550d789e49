#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ballspec/binomial.hpp"
#include "ballspec/certificate.hpp"

namespace ballspec::pleijel {

/// Largest d for which gamma(d) is computed; j_{d/2-1,1} must stay inside
/// the Bessel kernel's order box.
inline constexpr int kMaxDimension = 240;

struct PleijelRow {
  int d = 2;
  double gamma = 0.0;
  double log_gamma_value = 0.0;  // ln gamma(d)
  std::optional<double> quotient_next;  // gamma(d+1) / gamma(d)
};

/// Every inequality of the monotonicity chain for one d >= 4, evaluated.
struct MonotonicityCertificate {
  int d = 4;
  std::vector<Inequality> checks;
  /// (95/100)(1 + 5/d) as an exact fraction; equals 1 at d = 95.
  BigRational final_bound_exact;
  /// -4 + 39/d^2 + 41/d^3 at d = 4, exactly; -59/64.
  BigRational poly_spot_value;
  /// The corrected factorization of the polynomial bound holds exactly.
  bool poly_factorization_exact = false;

  bool all_hold() const;
};

/// ln gamma(d) = (d-2) ln 2 + 2 ln d + 2 ln Gamma(d/2) - d ln j_{d/2-1,1}.
double log_gamma_constant(int d);

/// gamma(d) = 2^{d-2} d^2 Gamma(d/2)^2 / j_{d/2-1,1}^d, evaluated in log space.
double gamma(int d);

std::vector<PleijelRow> gamma_table(int d_min, int d_max);

/// (d, gamma(d+1)/gamma(d)) for d in [d_min, d_max]. Throws
/// CertificateFailure if any quotient is not below 1.
std::vector<std::pair<int, double>> quotient_curve(int d_min, int d_max);

/// Throws CertificateFailure naming the first failed check.
MonotonicityCertificate monotonicity_certificate(int d);

/// gamma(d-1), after checking gamma(d) < gamma(d-1).
double neumann_pleijel_bound(int d);

}  // namespace ballspec::pleijel
