#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ballspec/bessel.hpp"
#include "ballspec/binomial.hpp"
#include "ballspec/io.hpp"
#include "ballspec/spectrum.hpp"
#include "ballspec/zeros.hpp"

using namespace ballspec;
using spectrum::BoundaryCondition;

namespace {
std::mt19937_64 rng_for(const char* name) {
  std::seed_seq seq(name, name + std::char_traits<char>::length(name));
  return std::mt19937_64(seq);
}
}  // namespace

TEST(Properties, RecurrenceAtRandomPoints) {
  auto rng = rng_for("recurrence");
  std::uniform_int_distribution<int> order(2, 238);
  std::uniform_real_distribution<double> arg(0.5, 200.0);
  for (int i = 0; i < 2000; ++i) {
    const int twice = order(rng);
    const double x = arg(rng);
    try {
      const double a = bessel::eval_J(Order::from_twice(twice - 2), x).value;
      const double b = bessel::eval_J(Order::from_twice(twice), x).value;
      const double c = bessel::eval_J(Order::from_twice(twice + 2), x).value;
      const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c)});
      EXPECT_LE(std::fabs(c - twice / x * b + a), 1e-12 * scale) << twice << " " << x;
    } catch (const RangeError&) {
      // underflow deep inside the turning point
    }
  }
}

TEST(Properties, InterlacingForRandomOrders) {
  auto rng = rng_for("interlacing");
  std::uniform_int_distribution<int> order(0, 160);
  for (int i = 0; i < 20; ++i) {
    const int twice = order(rng);
    const auto a = zeros::zeros_up_to(zeros::RootKind::BesselJ, 0, twice + 2, 150.0);
    const auto b = zeros::zeros_up_to(zeros::RootKind::BesselJ, 0, twice + 4, 150.0);
    ASSERT_GE(a.size(), b.size());
    for (std::size_t m = 0; m < b.size(); ++m) {
      EXPECT_LT(a[m], b[m]);
      if (m + 1 < a.size()) EXPECT_LT(b[m], a[m + 1]);
    }
  }
}

TEST(Properties, ZerosAreSignChanges) {
  auto rng = rng_for("sign changes");
  std::uniform_int_distribution<int> dim(2, 7), deg(0, 15), idx(1, 6);
  for (int i = 0; i < 100; ++i) {
    const int d = dim(rng), l = deg(rng), m = idx(rng);
    const double a = zeros::dirichlet_zero(l, d, m);
    const double da = 1e-9 * a;
    EXPECT_LT(bessel::eval_Xi(l, d, a - da).value * bessel::eval_Xi(l, d, a + da).value, 0.0);
    const double b = zeros::neumann_zero(l, d, l == 0 ? m + 1 : m);
    const double db = 1e-9 * b;
    EXPECT_LT(bessel::eval_Xi_prime(l, d, b - db).value * bessel::eval_Xi_prime(l, d, b + db).value, 0.0);
    if (l >= 1) EXPECT_LT(zeros::neumann_zero(l, d, m), a);
  }
}

TEST(Properties, NeumannDirichletIdentity) {
  for (int d = 2; d <= 5; ++d) {
    for (int m = 1; m <= 6; ++m) {
      const double beta = zeros::neumann_zero(0, d, m + 1);
      const double alpha = zeros::dirichlet_zero(1, d, m);
      EXPECT_LE(std::fabs(beta - alpha), 1e-11 * alpha);
    }
  }
}

TEST(Properties, NoCommonNeumannZeros) {
  for (int d = 2; d <= 3; ++d) {
    std::vector<std::vector<double>> z;
    for (int l = 0; l <= 12; ++l) {
      z.push_back(zeros::zeros_up_to(zeros::RootKind::NeumannXiPrime, l, d, 60.0));
    }
    double gap = 1e300;
    for (int l = 0; l <= 8; ++l) {
      for (int p = 1; p <= 4; ++p) {
        for (double a : z[l]) {
          for (double b : z[l + p]) gap = std::min(gap, std::fabs(a - b));
        }
      }
    }
    EXPECT_GT(gap, 1e-3) << d;
  }
}

TEST(Properties, TelescopingMultiplicities) {
  for (int d = 2; d <= 12; ++d) {
    BigInt sum = 0;
    for (int big_l = 0; big_l <= 40; ++big_l) {
      sum += spectrum::multiplicity(big_l, d);
      EXPECT_EQ(sum, binomial_exact(big_l + d - 1, d - 1) + binomial_exact(big_l + d - 2, d - 1));
    }
  }
}

TEST(Properties, LabelsTileRandomTables) {
  auto rng = rng_for("tiling");
  std::uniform_int_distribution<int> dim(2, 6);
  std::uniform_real_distribution<double> cut(1.0, 400.0);
  for (int i = 0; i < 30; ++i) {
    const int d = dim(rng);
    const auto bc = i % 2 == 0 ? BoundaryCondition::Dirichlet : BoundaryCondition::Neumann;
    const double lambda = cut(rng);
    const auto t = spectrum::enumerate(d, bc, lambda);
    std::uint64_t next = 1;
    double last = -1.0;
    for (const auto& r : t.records) {
      EXPECT_EQ(r.label_first, next);
      EXPECT_EQ(r.multiplicity, spectrum::multiplicity(r.l, d));
      EXPECT_GT(r.lambda, last);
      EXPECT_LE(r.lambda, lambda + spectrum::kCutoffSlack);
      last = r.lambda;
      next = r.label_last + 1;
    }
    // Nothing was missed: the next radial zero of every degree lies beyond the cutoff.
    for (int l = 0; l <= 3; ++l) {
      int have = 0;
      for (const auto& r : t.records) have += r.l == l ? 1 : 0;
      const double z = spectrum::radial_zero(d, bc, l, have + 1);
      EXPECT_GT(z * z, lambda);
    }
  }
}

TEST(Properties, LogGammaRecursion) {
  auto rng = rng_for("log gamma");
  std::uniform_real_distribution<double> arg(0.5, 199.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = arg(rng);
    EXPECT_NEAR(bessel::log_gamma(x + 1) - bessel::log_gamma(x), std::log(x), 1e-12 * std::max(1.0, std::log(x)));
  }
}

TEST(Properties, RoundingStaysWithinHalfAUnit) {
  auto rng = rng_for("rounding");
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  for (int i = 0; i < 5000; ++i) {
    const double v = val(rng);
    const auto r = io::round_half_away(v, 6);
    EXPECT_LE(std::fabs(std::stod(r.text) - v), 0.5e-6 + 1e-15) << v;
    EXPECT_EQ(r.text.size() - r.text.find('.'), 7u);
  }
}
