#include <gtest/gtest.h>

#include <cmath>

#include "ballspec/io.hpp"

using namespace ballspec;
using namespace ballspec::io;

TEST(Rounding, HalfAwayFromZero) {
  EXPECT_EQ(round_half_away(0.5, 0).text, "1");
  EXPECT_TRUE(round_half_away(0.5, 0).tie);
  EXPECT_EQ(round_half_away(-0.5, 0).text, "-1");
  EXPECT_EQ(round_half_away(2.5, 0).text, "3");
  EXPECT_EQ(round_half_away(0.125, 2).text, "0.13");
  EXPECT_TRUE(round_half_away(0.125, 2).tie);
}

TEST(Rounding, DecidedOnTheBinaryValue) {
  // 0.0000005 is stored slightly below 5e-7, so it is not a tie.
  const auto r = round_half_away(0.0000005, 6);
  EXPECT_FALSE(r.tie);
  EXPECT_EQ(r.text, "0.000000");
  // 2.675 is stored as 2.67499999...
  EXPECT_EQ(round_half_away(2.675, 2).text, "2.67");
  EXPECT_EQ(round_half_away(1.5, 0).text, "2");
}

TEST(Rounding, CarriesAndSigns) {
  EXPECT_EQ(round_half_away(9.9999996, 6).text, "10.000000");
  EXPECT_EQ(round_half_away(-0.0000001, 6).text, "0.000000");
  EXPECT_EQ(round_half_away(0.691660276, 6).text, "0.691660");
  EXPECT_THROW(round_half_away(std::nan(""), 6), std::exception);
}

TEST(FullPrecision, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 2.404825557695773, 1e-300, 123456789.123}) {
    EXPECT_EQ(std::stod(full_precision(v)), v);
  }
}

TEST(SpectrumOutput, CsvHeaderAndRows) {
  const auto t = spectrum::enumerate(2, spectrum::BoundaryCondition::Neumann, 4.0);
  const auto csv = to_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,bc,l,m,zero,lambda,multiplicity,label_first,label_last");
  EXPECT_NE(csv.find("\n2,neumann,1,1,1.84118378134065"), std::string::npos);
  const auto j = to_json(t);
  EXPECT_EQ(j["records"].size(), 2u);
  EXPECT_EQ(j["records"][1]["label_last"], 3);
  const double z = j["records"][1]["zero"];
  EXPECT_EQ(z, t.records[1].zero);
}

TEST(PleijelOutput, TableModeUsesSixDecimals) {
  const auto rows = pleijel::gamma_table(2, 3);
  EXPECT_EQ(to_csv(rows, true), "d,gamma,quotient\n2,0.691660,0.659204\n3,0.455945,\n");
  const auto full = to_csv(rows, false);
  EXPECT_NE(full.find("2,0.69166027612257"), std::string::npos);
}

TEST(PleijelOutput, PlotData) {
  const auto j = plot_json(pleijel::quotient_curve(2, 4));
  EXPECT_EQ(j["x"].size(), 3u);
  EXPECT_EQ(j["x"][0], 2);
  EXPECT_NEAR(j["hline"].get<double>(), 0.7357588823428847, 1e-16);
}

TEST(CertificateOutput, FractionsAreExact) {
  const auto j = to_json(pleijel::monotonicity_certificate(95));
  EXPECT_EQ(j["final_bound"], "1/1");
  EXPECT_EQ(j["poly_spot_value_d4"], "-59/64");
  EXPECT_TRUE(j["passed"].get<bool>());
}
