#include <gtest/gtest.h>

#include <chrono>
#include <sstream>

#include "ballspec/bessel.hpp"
#include "ballspec/cli.hpp"
#include "ballspec/selfcheck.hpp"

using namespace ballspec;

namespace {

double seconds_of(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Kernel shifted by 1e-6 on every value.
double biased(Order nu, double x) { return bessel::eval_J(nu, x).value + 1e-6; }

// A relative bias keeps the recurrence linear; only the closed-form anchor
// at nu = 1/2 can see it.
double scaled(Order nu, double x) { return bessel::eval_J(nu, x).value * (1 + 1e-6); }

}  // namespace

TEST(Selfcheck, FullSuitePasses) {
  selfcheck::Report report;
  const double t = seconds_of([&] { report = selfcheck::run({false, {}}); });
  for (const auto& o : report.outcomes) EXPECT_TRUE(o.passed) << o.name << ": " << o.detail;
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.outcomes.front().name, "recurrence_residual");
  EXPECT_LT(t, 120.0);
}

TEST(Selfcheck, FastSuitePasses) {
  selfcheck::Report report;
  const double t = seconds_of([&] { report = selfcheck::run({true, {}}); });
  EXPECT_TRUE(report.passed());
  EXPECT_LT(t, 10.0);
}

TEST(Selfcheck, BiasedKernelIsCaught) {
  const auto report = selfcheck::run({true, biased});
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.first_failure()->name, "recurrence_residual");
  const auto full = selfcheck::run({true, scaled});
  ASSERT_FALSE(full.passed());
  EXPECT_EQ(full.first_failure()->name, "recurrence_residual");
}

TEST(Selfcheck, CliExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"selfcheck", "--fast"}, out, err), 0);
  EXPECT_NE(out.str().find("all 20 checks passed"), std::string::npos);

  std::ostringstream out2, err2;
  EXPECT_EQ(cli::run({"selfcheck", "--fast"}, out2, err2, biased), 2);
  EXPECT_NE(err2.str().find("recurrence_residual"), std::string::npos);
}
