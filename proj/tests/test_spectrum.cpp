#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ballspec/errors.hpp"
#include "ballspec/spectrum.hpp"

using namespace ballspec;
using namespace ballspec::spectrum;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Multiplicity, SpecValues) {
  EXPECT_EQ(multiplicity(0, 5), 1u);
  EXPECT_EQ(multiplicity(3, 3), 7u);
  EXPECT_EQ(multiplicity(2, 4), 9u);
  EXPECT_EQ(multiplicity(0, 2), 1u);
  EXPECT_EQ(multiplicity(4, 2), 2u);
  EXPECT_THROW(multiplicity(-1, 3), InvalidArgument);
  EXPECT_THROW(multiplicity(1, 1), InvalidArgument);
}

TEST(Multiplicity, OverflowIsReported) {
  EXPECT_THROW(multiplicity(1000, 60), OverflowError);
}

TEST(Enumerate, NeumannDiscOrdering) {
  const auto t = enumerate(2, BoundaryCondition::Neumann, 18.0);
  ASSERT_EQ(t.records.size(), 5u);
  const int ls[] = {0, 1, 2, 0, 3};
  const int ms[] = {1, 1, 1, 2, 1};
  const std::uint64_t first[] = {1, 2, 4, 6, 7};
  const double z[] = {0.0, 1.84118378134065930264, 3.054236928227140322, 3.831705970207512315,
                      4.201188941210528496};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(t.records[i].l, ls[i]);
    EXPECT_EQ(t.records[i].m, ms[i]);
    EXPECT_EQ(t.records[i].label_first, first[i]);
    EXPECT_NEAR(t.records[i].zero, z[i], 1e-13 * std::max(1.0, z[i]));
  }
  EXPECT_EQ(t.count(), 8u);
}

TEST(Enumerate, DirichletBallInThreeDimensions) {
  const auto t = enumerate(3, BoundaryCondition::Dirichlet, 40.0);
  ASSERT_GE(t.records.size(), 2u);
  EXPECT_EQ(t.records[0].l, 0);
  EXPECT_NEAR(t.records[0].lambda, kPi * kPi, 1e-12);
  EXPECT_EQ(t.records[0].multiplicity, 1u);
  EXPECT_EQ(t.records[1].l, 1);
  EXPECT_NEAR(t.records[1].zero, 4.493409457909064, 1e-13);
  EXPECT_EQ(t.records[1].multiplicity, 3u);
  EXPECT_EQ(t.records[1].label_first, 2u);
  EXPECT_EQ(t.records[1].label_last, 4u);
}

TEST(Enumerate, SingleDiscRecord) {
  const auto t = enumerate(2, BoundaryCondition::Dirichlet, 6.0);
  ASSERT_EQ(t.records.size(), 1u);
  EXPECT_NEAR(t.records[0].lambda, 5.783185962946785, 1e-12);
}

TEST(Enumerate, CutoffIsInclusive) {
  const double lambda = 2.404825557695773 * 2.404825557695773;
  EXPECT_EQ(enumerate(2, BoundaryCondition::Dirichlet, lambda).records.size(), 1u);
  EXPECT_TRUE(enumerate(2, BoundaryCondition::Dirichlet, 5.7).records.empty());
}

TEST(Enumerate, RejectsBadInput) {
  EXPECT_THROW(enumerate(1, BoundaryCondition::Dirichlet, 10.0), InvalidArgument);
  EXPECT_THROW(enumerate(2, BoundaryCondition::Dirichlet, -1.0), RangeError);
  EXPECT_THROW(enumerate(2, BoundaryCondition::Dirichlet, 40001.0), RangeError);
}

TEST(LabelOf, SpecValues) {
  EXPECT_EQ(label_of(2, BoundaryCondition::Neumann, 0, 1), 1u);
  EXPECT_EQ(label_of(2, BoundaryCondition::Neumann, 2, 1), 4u);
  EXPECT_EQ(label_of(2, BoundaryCondition::Neumann, 0, 2), 6u);
  EXPECT_EQ(label_of(3, BoundaryCondition::Dirichlet, 0, 2), 10u);
}

TEST(Weyl, SpecValues) {
  EXPECT_EQ(weyl_count(2, 0.0), 0.0);
  EXPECT_NEAR(weyl_count(2, 100.0), 25.0, 1e-12);
  const double omega3 = 4 * kPi / 3;
  EXPECT_NEAR(weyl_count(3, 100.0), omega3 * omega3 / std::pow(2 * kPi, 3) * 1000, 1e-12);
  EXPECT_NEAR(unit_ball_volume(2), kPi, 1e-15);
}

TEST(Weyl, CountsTrackTheLeadingTerm) {
  for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
    const double r2 = static_cast<double>(enumerate(2, bc, 2000.0).count()) / weyl_count(2, 2000.0);
    const double r3 = static_cast<double>(enumerate(3, bc, 900.0).count()) / weyl_count(3, 900.0);
    EXPECT_NEAR(r2, 1.0, 0.15);
    EXPECT_NEAR(r3, 1.0, 0.15);
  }
}

TEST(BoundaryCondition, ParsesNames) {
  EXPECT_EQ(parse_boundary_condition("neumann"), BoundaryCondition::Neumann);
  EXPECT_EQ(to_string(BoundaryCondition::Dirichlet), "dirichlet");
  EXPECT_THROW(parse_boundary_condition("Robin"), InvalidArgument);
}
