#include "ballspec/selfcheck.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ballspec/bessel.hpp"
#include "ballspec/binomial.hpp"
#include "ballspec/courant.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/io.hpp"
#include "ballspec/pleijel.hpp"
#include "ballspec/spectrum.hpp"
#include "ballspec/zeros.hpp"

namespace ballspec::selfcheck {

bool Report::passed() const { return first_failure() == nullptr; }

const Outcome* Report::first_failure() const {
  for (const auto& o : outcomes) {
    if (!o.passed) return &o;
  }
  return nullptr;
}

namespace {

using spectrum::BoundaryCondition;

struct Failed {
  std::string message;
};

template <typename... Parts>
[[noreturn]] void fail(const Parts&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << parts);
  throw Failed{os.str()};
}

double max_abs(std::initializer_list<double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  return m;
}

std::vector<double> sample_grid(double lo, double hi, int points) {
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return xs;
}

// J_{nu+1} - (2 nu / x) J_nu + J_{nu-1} over nu in {0, 1/2, ..., 20}.
// Negative orders come from J_{-1} = -J_1 and J_{-1/2} = sqrt(2/(pi x)) cos x.
std::string recurrence_residual(const JEvaluator& j, bool fast) {
  const auto xs = sample_grid(0.5, 60.0, fast ? 50 : 200);
  double worst = 0.0;
  auto below_of = [&](int twice, double x) {
    if (twice == 0) return -j(Order::from_twice(2), x);
    if (twice == 1) return std::sqrt(2 / (std::numbers::pi * x)) * std::cos(x);
    return j(Order::from_twice(twice - 2), x);
  };
  for (int twice = 0; twice <= 40; ++twice) {
    const Order nu = Order::from_twice(twice);
    for (double x : xs) {
      const double below = below_of(twice, x);
      const double here = j(nu, x);
      const double above = j(nu.next(), x);
      const double residual = std::fabs(above - 2 * nu.value() / x * here + below);
      const double scale = std::max(max_abs({below, here, above}), 1e-300);
      worst = std::max(worst, residual / scale);
      if (residual > 1e-10 * scale) {
        fail("recurrence residual ", residual / scale, " at nu = ", nu.to_string(), ", x = ", x);
      }
    }
  }
  return "worst scaled residual " + io::full_precision(worst);
}

std::string derivative_consistency(bool fast) {
  const auto rs = sample_grid(0.5, 60.0, fast ? 50 : 200);
  double worst = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (int l = 1; 2 * l + d - 2 <= 40; ++l) {
      for (double r : rs) {
        const double xi = bessel::eval_Xi(l, d, r).value;
        const double lower = bessel::eval_Xi(l - 1, d, r).value;
        const double upper = bessel::eval_Xi(l + 1, d, r).value;
        const double via_up = bessel::eval_Xi_prime(l, d, r).value;
        const double via_down = -(l + d - 2) / r * xi + lower;
        const double scale = std::max(max_abs({l / r * xi, upper, (l + d - 2) / r * xi, lower}), 1e-300);
        const double diff = std::fabs(via_up - via_down) / scale;
        worst = std::max(worst, diff);
        if (diff > 1e-11) fail("Xi' routes disagree by ", diff, " at l = ", l, ", d = ", d, ", r = ", r);
      }
    }
  }
  return "worst scaled difference " + io::full_precision(worst);
}

std::string xi_three_term(bool fast) {
  const auto rs = sample_grid(0.5, 60.0, fast ? 50 : 200);
  double worst = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (int l = 2; 2 * l + d - 2 <= 40; ++l) {
      for (double r : rs) {
        const double a = bessel::eval_Xi(l, d, r).value;
        const double b = bessel::eval_Xi(l - 1, d, r).value;
        const double c = bessel::eval_Xi(l - 2, d, r).value;
        const double coef = (2.0 * l + d - 4) / r;
        const double scale = std::max(max_abs({a, coef * b, c}), 1e-300);
        const double diff = std::fabs(a - (coef * b - c)) / scale;
        worst = std::max(worst, diff);
        if (diff > 1e-10) fail("Xi three-term recursion off by ", diff, " at l = ", l, ", d = ", d, ", r = ", r);
      }
    }
  }
  return "worst scaled residual " + io::full_precision(worst);
}

std::string half_integer_closed_form() {
  const double ref = bessel::eval_Xi(0, 3, 1.0).value / std::sin(1.0);
  for (double r : {0.5, 1.0, 2.0, 4.0, 7.5, 11.0, 25.0, 60.0}) {
    const double c = bessel::eval_Xi(0, 3, r).value * r / std::sin(r);
    if (std::fabs(c - ref) > 1e-12 * std::fabs(ref)) fail("Xi_0^(3) r / sin r varies: ", c, " vs ", ref);
  }
  return "Xi_0^(3)(r) r / sin r = " + io::full_precision(ref);
}

std::string log_gamma_recursion() {
  for (double x : sample_grid(0.5, 100.0, 400)) {
    const double residual = bessel::log_gamma(x + 1) - bessel::log_gamma(x) - std::log(x);
    if (std::fabs(residual) > 1e-13) fail("log_gamma recursion residual ", residual, " at x = ", x);
  }
  return "400 points on [0.5, 100]";
}

std::string interlacing(bool fast) {
  const int top = fast ? 10 : 20;  // twice nu
  std::vector<std::vector<double>> z;
  for (int twice = 0; twice <= top + 2; ++twice) {
    auto roots = zeros::zeros_up_to(zeros::RootKind::BesselJ, 0, twice + 2, 45.0);
    if (roots.size() < 9) fail("fewer than 9 zeros of J_", Order::from_twice(twice).to_string(), " below 45");
    z.push_back(std::move(roots));
  }
  double tightest = 1e300;
  for (int twice = 0; twice <= top; ++twice) {
    const auto& a = z[static_cast<std::size_t>(twice)];
    const auto& b = z[static_cast<std::size_t>(twice + 2)];
    for (std::size_t m = 0; m < 8; ++m) {
      const double g1 = b[m] - a[m];
      const double g2 = a[m + 1] - b[m];
      tightest = std::min({tightest, g1, g2});
      if (!(g1 >= 1e-6 && g2 >= 1e-6)) {
        fail("interlacing fails at nu = ", Order::from_twice(twice).to_string(), ", m = ", m + 1);
      }
    }
  }
  return "smallest gap " + io::full_precision(tightest);
}

std::string first_zero_bounds() {
  for (int twice = 1; twice <= 120; ++twice) {
    const double nu = 0.5 * twice;
    const double j = zeros::bessel_zero(Order::from_twice(twice), 1);
    const double lo = std::sqrt(nu * (nu + 2));
    const double hi = std::sqrt(nu + 1) * (std::sqrt(nu + 2) + 1);
    if (!(lo < j && j < hi)) fail("j_{", nu, ",1} = ", j, " outside (", lo, ", ", hi, ")");
  }
  return "nu = 1/2 .. 60";
}

std::string neumann_dirichlet_identity() {
  double worst = 0.0;
  for (int d = 2; d <= 5; ++d) {
    for (int m = 1; m <= 6; ++m) {
      const double beta = zeros::neumann_zero(0, d, m + 1);
      const double alpha = zeros::dirichlet_zero(1, d, m);
      const double rel = std::fabs(beta - alpha) / alpha;
      worst = std::max(worst, rel);
      if (rel > 1e-11) fail("beta_{0,", m + 1, "} != alpha_{1,", m, "} for d = ", d);
    }
  }
  return "worst relative difference " + io::full_precision(worst);
}

std::string neumann_common_zero_gap(bool fast) {
  double smallest = 1e300;
  const int l_top = fast ? 4 : 8;
  for (int d = 2; d <= 3; ++d) {
    std::vector<std::vector<double>> sets;
    for (int l = 0; l <= l_top + 4; ++l) {
      sets.push_back(zeros::zeros_up_to(zeros::RootKind::NeumannXiPrime, l, d, 60.0));
    }
    for (int l = 0; l <= l_top; ++l) {
      for (int p = 1; p <= 4; ++p) {
        for (double a : sets[static_cast<std::size_t>(l)]) {
          for (double b : sets[static_cast<std::size_t>(l + p)]) {
            smallest = std::min(smallest, std::fabs(a - b));
            if (std::fabs(a - b) <= 1e-3) {
              fail("Xi'_", l, " and Xi'_", l + p, " (d = ", d, ") have zeros ", a, " and ", b);
            }
          }
        }
      }
    }
  }
  return "smallest distance " + io::full_precision(smallest);
}

std::string neumann_before_dirichlet() {
  for (int d = 2; d <= 5; ++d) {
    for (int l = 1; l <= 10; ++l) {
      if (!(zeros::neumann_zero(l, d, 1) < zeros::dirichlet_zero(l, d, 1))) {
        fail("beta_{", l, ",1} >= alpha_{", l, ",1} for d = ", d);
      }
    }
  }
  return "l = 1..10, d = 2..5";
}

std::string multiplicity_telescoping() {
  for (int d = 2; d <= 8; ++d) {
    std::uint64_t sum = 0;
    for (int big_l = 0; big_l <= 30; ++big_l) {
      sum += spectrum::multiplicity(big_l, d);
      const auto expected = binomial(big_l + d - 1, d - 1) + binomial(big_l + d - 2, d - 1);
      if (sum != expected) fail("telescoping sum fails at L = ", big_l, ", d = ", d);
    }
  }
  return "L = 0..30, d = 2..8";
}

void check_tiling(const spectrum::SpectrumTable& t) {
  std::uint64_t next = 1;
  for (const auto& r : t.records) {
    if (r.label_first != next || r.label_last != r.label_first + r.multiplicity - 1) {
      fail("labels do not tile for d = ", t.d, " at (l = ", r.l, ", m = ", r.m, ")");
    }
    next = r.label_last + 1;
  }
}

std::string weyl_and_tiling(bool fast) {
  std::ostringstream os;
  os.precision(6);
  const std::array<std::pair<int, double>, 2> cases = {{{2, fast ? 500.0 : 2000.0}, {3, fast ? 300.0 : 900.0}}};
  for (const auto& [d, lambda] : cases) {
    for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
      const auto table = spectrum::enumerate(d, bc, lambda);
      check_tiling(table);
      const double ratio = static_cast<double>(table.count()) / spectrum::weyl_count(d, lambda);
      if (!fast && std::fabs(ratio - 1) > 0.15) {
        fail("Weyl ratio ", ratio, " for d = ", d, " ", spectrum::to_string(bc));
      }
      os << "d=" << d << " " << spectrum::to_string(bc) << " N/W=" << ratio << "; ";
    }
  }
  return os.str();
}

std::string dirichlet_d3_closed_form() {
  for (int m = 1; m <= 10; ++m) {
    const double z = zeros::dirichlet_zero(0, 3, m);
    if (std::fabs(z - m * std::numbers::pi) > 1e-12 * m * std::numbers::pi) {
      fail("alpha_{0,", m, "}^(3) = ", z, " differs from ", m, " pi");
    }
  }
  return "m = 1..10";
}

std::string radial_ordering_lemmas() {
  for (int d = 2; d <= 20; ++d) {
    for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
      if (bc == BoundaryCondition::Dirichlet && d < 3) continue;
      const double a = spectrum::radial_zero(d, bc, 1, 1);
      const double b = spectrum::radial_zero(d, bc, 0, 2);
      if (!(a < b)) fail("lambda_{1,1} >= lambda_{0,2} for d = ", d, " ", spectrum::to_string(bc));
    }
  }
  return "Dirichlet d = 3..20, Neumann d = 2..20";
}

std::string disc_courant(bool fast) {
  const double lambda = fast ? 400.0 : 2000.0;
  std::ostringstream os;
  for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
    const auto table = spectrum::enumerate(2, bc, lambda);
    for (const auto& r : table.records) {
      if (courant::nodal_count_disc(r.l, r.m, r.bc) > r.label_first) {
        fail("Courant bound violated at (l = ", r.l, ", m = ", r.m, ")");
      }
    }
    const auto sharp = courant::sharp_labels(courant::courant_sharp_table(table));
    if (sharp != std::set<std::uint64_t>{1, 2, 4}) {
      fail("disc ", spectrum::to_string(bc), " sharp set differs from {1, 2, 4}");
    }
    os << spectrum::to_string(bc) << ": " << table.records.size() << " eigenvalues, 3 sharp; ";
  }
  return os.str();
}

std::string sphere_parity_bookkeeping() {
  for (int d = 3; d <= 6; ++d) {
    for (int l = 0; l <= 20; ++l) {
      std::uint64_t below = 0;
      std::uint64_t same_parity = 0;
      for (int k = 0; k < l; ++k) {
        below += spectrum::multiplicity(k, d);
        if ((l - k) % 2 == 0) same_parity += spectrum::multiplicity(k, d);
      }
      const auto s = courant::sphere_labeling(l, d);
      if (s.min_label != below + 1) fail("sphere min_label mismatch at l = ", l, ", d = ", d);
      if (s.symmetry_bound != 2 * (same_parity + 1)) {
        fail("sphere symmetry bound mismatch at l = ", l, ", d = ", d);
      }
    }
  }
  return "l <= 20, d = 3..6";
}

std::string ball_theorems(bool fast) {
  for (int d = 3; d <= (fast ? 3 : 5); ++d) {
    (void)courant::sphere_courant_sharp(d);
    for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
      if (courant::sharp_labels(courant::courant_sharp_ball(d, bc)) != std::set<std::uint64_t>{1, 2}) {
        fail("ball d = ", d, " ", spectrum::to_string(bc), " sharp set differs from {1, 2}");
      }
    }
  }
  return fast ? "d = 3" : "d = 3..5";
}

constexpr std::array<const char*, 20> kTable = {
    "0.691660", "0.455945", "0.296901", "0.192940", "0.125581", "0.081982", "0.053704",
    "0.035306", "0.023291", "0.015417", "0.010236", "0.006817", "0.004553", "0.003048",
    "0.002046", "0.001376", "0.000928", "0.000627", "0.000424", "0.000288"};

std::string gamma_table_reproduction() {
  const auto rows = pleijel::gamma_table(2, 21);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto rounded = io::round_half_away(rows[i].gamma, 6);
    if (rounded.tie) fail("gamma(", rows[i].d, ") is a rounding tie at 6 decimals");
    if (rounded.text != kTable[i]) fail("gamma(", rows[i].d, ") rounds to ", rounded.text, ", table has ", kTable[i]);
  }
  const double j01 = zeros::bessel_zero(Order::from_twice(0), 1);
  const double g2 = 4 / (j01 * j01);
  const double g3 = 9 / (2 * std::numbers::pi * std::numbers::pi);
  if (std::fabs(rows[0].gamma - g2) > 1e-12 * g2) fail("gamma(2) differs from 4/j01^2");
  if (std::fabs(rows[1].gamma - g3) > 1e-12 * g3) fail("gamma(3) differs from 9/(2 pi^2)");
  return "20 entries and both closed forms";
}

std::string quotient_behaviour() {
  const auto curve = pleijel::quotient_curve(2, 94);
  const double limit = 2 / std::numbers::e;
  // The quotient climbs to 2/e from below once d >= 4.
  for (const auto& [d, q] : curve) {
    if (!(q < limit)) fail("quotient at d = ", d, " is ", q, ", not below 2/e");
  }
  for (std::size_t i = 3; i < curve.size(); ++i) {
    if (!(curve[i].second > curve[i - 1].second)) fail("quotient not increasing at d = ", curve[i].first);
  }
  if (std::fabs(curve.back().second - limit) > 0.05) fail("quotient at d = 94 too far from 2/e");
  const auto tail = pleijel::quotient_curve(pleijel::kMaxDimension - 10, pleijel::kMaxDimension - 1);
  for (const auto& [d, q] : tail) {
    if (std::fabs(q - limit) > 0.05) fail("quotient at d = ", d, " is ", q, ", not within 0.05 of 2/e");
  }
  if (!(2 * std::exp(-0.75) < 0.95)) fail("2 e^{-3/4} >= 0.95");
  return "d = 2..94 below 2/e, increasing from d = 4; tail within 0.05 of 2/e";
}

std::string monotonicity(bool fast) {
  const int top = fast ? 30 : 200;
  for (int d = 4; d <= top; ++d) {
    const auto cert = pleijel::monotonicity_certificate(d);
    if (!cert.all_hold()) fail("monotonicity certificate fails at d = ", d);
  }
  if (pleijel::monotonicity_certificate(95).final_bound_exact != 1) fail("final bound at d = 95 is not 1");
  return "d = 4.." + std::to_string(top);
}

}  // namespace

Report run(const Config& config) {
  const JEvaluator j = config.j_eval ? config.j_eval : [](Order nu, double x) {
    return bessel::eval_J(nu, x).value;
  };
  const bool fast = config.fast;

  std::vector<std::pair<std::string, std::function<std::string()>>> suite = {
      {"recurrence_residual", [&] { return recurrence_residual(j, fast); }},
      {"xi_derivative_routes", [&] { return derivative_consistency(fast); }},
      {"xi_three_term_recursion", [&] { return xi_three_term(fast); }},
      {"half_integer_closed_form", [] { return half_integer_closed_form(); }},
      {"log_gamma_recursion", [] { return log_gamma_recursion(); }},
      {"interlacing", [&] { return interlacing(fast); }},
      {"first_zero_bounds", [] { return first_zero_bounds(); }},
      {"neumann_dirichlet_identity", [] { return neumann_dirichlet_identity(); }},
      {"neumann_common_zero_gap", [&] { return neumann_common_zero_gap(fast); }},
      {"neumann_before_dirichlet", [] { return neumann_before_dirichlet(); }},
      {"multiplicity_telescoping", [] { return multiplicity_telescoping(); }},
      {"weyl_and_label_tiling", [&] { return weyl_and_tiling(fast); }},
      {"dirichlet_d3_closed_form", [] { return dirichlet_d3_closed_form(); }},
      {"radial_ordering_lemmas", [] { return radial_ordering_lemmas(); }},
      {"disc_courant", [&] { return disc_courant(fast); }},
      {"sphere_parity_bookkeeping", [] { return sphere_parity_bookkeeping(); }},
      {"ball_theorems", [&] { return ball_theorems(fast); }},
      {"gamma_table", [] { return gamma_table_reproduction(); }},
      {"quotient_curve", [] { return quotient_behaviour(); }},
      {"monotonicity_certificates", [&] { return monotonicity(fast); }},
  };

  Report report;
  for (auto& [name, check] : suite) {
    Outcome o;
    o.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      o.detail = check();
      o.passed = true;
    } catch (const Failed& f) {
      o.detail = f.message;
    } catch (const std::exception& e) {
      o.detail = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace ballspec::selfcheck
