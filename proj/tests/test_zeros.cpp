#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ballspec/errors.hpp"
#include "ballspec/zeros.hpp"
#include "oracle/bessel_oracle.hpp"

using namespace ballspec;
using namespace ballspec::zeros;

namespace {
constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// Oracle zero of J_nu bracketed in [lo, hi].
double oracle_zero(int twice_nu, double lo, double hi) {
  auto f = [&](const oracle::Big& x) { return oracle::bessel_j(twice_nu, x); };
  return static_cast<double>(oracle::bisect(f, lo, hi));
}
}  // namespace

TEST(BesselZero, SpecValues) {
  EXPECT_LT(rel(bessel_zero(Order::from_twice(1), 3), 3 * kPi), 1e-13);
  EXPECT_LT(rel(bessel_zero(Order::from_twice(0), 1), 2.404825557695773), 1e-13);
  const double j11 = bessel_zero(Order::from_twice(2), 1);
  EXPECT_LT(rel(j11, 3.831705970207512), 1e-13);
  EXPECT_LT(std::sqrt(3.0), j11);
  EXPECT_LT(j11, std::sqrt(2.0) * (std::sqrt(3.0) + 1));
}

TEST(BesselZero, AgreesWithOracle) {
  EXPECT_LT(rel(bessel_zero(Order::from_twice(0), 2), oracle_zero(0, 5.4, 5.6)), 1e-13);
  EXPECT_LT(rel(bessel_zero(Order::from_twice(3), 1), oracle_zero(3, 4.4, 4.6)), 1e-13);
  EXPECT_LT(rel(bessel_zero(Order::from_twice(20), 3), oracle_zero(20, 21.5, 22.5)), 1e-12);
}

TEST(BesselZero, RejectsZerosPastTheBox) {
  EXPECT_THROW(bessel_zero(Order::from_twice(0), 70), RangeError);
  EXPECT_THROW(bessel_zero(Order::from_twice(0), 0), InvalidArgument);
}

TEST(DirichletZero, SpecValues) {
  EXPECT_LT(rel(dirichlet_zero(0, 3, 2), 2 * kPi), 1e-13);
  EXPECT_LT(rel(dirichlet_zero(1, 3, 1), 4.493409457909064), 1e-13);
  EXPECT_LT(rel(dirichlet_zero(1, 2, 1), 3.831705970207512), 1e-13);
}

TEST(NeumannZero, SpecValues) {
  EXPECT_EQ(neumann_zero(0, 2, 1), 0.0);
  EXPECT_LT(rel(neumann_zero(0, 2, 2), 3.831705970207512), 1e-13);
  EXPECT_LT(rel(neumann_zero(1, 2, 1), 1.8411837813406593), 1e-13);
  EXPECT_LT(rel(neumann_zero(2, 2, 1), 3.054236928227140322), 1e-13);
  EXPECT_LT(rel(neumann_zero(3, 2, 1), 4.201188941210528496), 1e-13);
}

TEST(NeumannZero, AgreesWithOracleInThreeDimensions) {
  auto f = [](const oracle::Big& r) { return oracle::xi_prime_scaled(2, 3, r); };
  const double o = static_cast<double>(oracle::bisect(f, 3.0, 3.6));
  EXPECT_LT(rel(neumann_zero(2, 3, 1), o), 1e-13);
}

TEST(FindZero, DispatchesOnKind) {
  EXPECT_EQ(find_zero({RootKind::DirichletXi, 1, 3, 1}), dirichlet_zero(1, 3, 1));
  EXPECT_EQ(find_zero({RootKind::NeumannXiPrime, 0, 2, 1}), 0.0);
  EXPECT_EQ(find_zero({RootKind::BesselJ, 0, 3, 3}), bessel_zero(Order::from_twice(1), 3));
}

TEST(FindZero, ValidatesTolerance) {
  EXPECT_THROW(find_zero({RootKind::BesselJ, 0, 2, 1, 1e-20}), InvalidArgument);
  EXPECT_THROW(find_zero({RootKind::BesselJ, 0, 2, 1, 0.1}), InvalidArgument);
}

TEST(ScanBrackets, SpecExamples) {
  const auto a = scan_brackets(RootKind::BesselJ, 0, 3, 10.0, 0.5);
  ASSERT_EQ(a.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_LT(a[i].lo, (i + 1) * kPi);
    EXPECT_GT(a[i].hi, (i + 1) * kPi);
  }
  const auto b = scan_brackets(RootKind::NeumannXiPrime, 0, 2, 4.0, 0.25);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_LT(b[0].lo, 3.8317);
  EXPECT_GT(b[0].hi, 3.8317);
  const auto c = scan_brackets(RootKind::DirichletXi, 0, 2, 6.0, 0.25);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_LT(c[1].lo, 5.520078110286311);
  EXPECT_GT(c[1].hi, 5.520078110286311);
}

TEST(ScanBrackets, StepIsValidated) {
  EXPECT_THROW(scan_brackets(RootKind::BesselJ, 0, 3, 30.0, 0.0), InvalidArgument);
  EXPECT_THROW(scan_brackets(RootKind::BesselJ, 0, 3, 30.0, 2.0), InvalidArgument);
  // The widest legal step still resolves zeros pi apart.
  EXPECT_EQ(scan_brackets(RootKind::BesselJ, 0, 3, 30.0, kPi / 2).size(), 9u);
}

TEST(ZerosUpTo, CountsMatchBrackets) {
  const auto z = zeros_up_to(RootKind::DirichletXi, 0, 3, 40.0);
  ASSERT_EQ(z.size(), 12u);
  for (std::size_t i = 0; i < z.size(); ++i) EXPECT_LT(rel(z[i], (i + 1) * kPi), 1e-13);
}

TEST(ZeroFreeBelow, IsBelowTheFirstZero) {
  for (int d = 2; d <= 6; ++d) {
    for (int l = 0; l <= 12; ++l) {
      EXPECT_LT(zero_free_below(RootKind::DirichletXi, l, d), dirichlet_zero(l, d, 1));
      const int m = l == 0 ? 2 : 1;
      EXPECT_LT(zero_free_below(RootKind::NeumannXiPrime, l, d), neumann_zero(l, d, m));
    }
  }
}
