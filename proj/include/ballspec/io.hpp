#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ballspec/courant.hpp"
#include "ballspec/pleijel.hpp"
#include "ballspec/spectrum.hpp"

namespace ballspec::io {

using Json = nlohmann::ordered_json;

/// Decimal rounding of a double, half away from zero, decided on the exact
/// binary value. `tie` is set when the discarded digits were exactly one half.
struct Rounded {
  std::string text;
  bool tie = false;
};
Rounded round_half_away(double value, int decimals);

/// 17 significant digits.
std::string full_precision(double value);

Json to_json(const spectrum::EigenvalueRecord& r);
Json to_json(const spectrum::SpectrumTable& table);
/// Header: d,bc,l,m,zero,lambda,multiplicity,label_first,label_last
std::string to_csv(const spectrum::SpectrumTable& table);
std::string to_text(const spectrum::SpectrumTable& table);

Json to_json(const Inequality& q);
Json to_json(const std::vector<courant::SharpnessVerdict>& verdicts);
std::string to_text(const std::vector<courant::SharpnessVerdict>& verdicts);

Json to_json(const std::vector<pleijel::PleijelRow>& rows);
/// Header: d,gamma,quotient. `table_mode` rounds to 6 decimals.
std::string to_csv(const std::vector<pleijel::PleijelRow>& rows, bool table_mode);
std::string to_text(const std::vector<pleijel::PleijelRow>& rows);

/// {"x": [d...], "y": [quotient...], "hline": 2/e}
Json plot_json(const std::vector<std::pair<int, double>>& curve);
/// Header: d,quotient
std::string to_csv(const std::vector<std::pair<int, double>>& curve);

Json to_json(const pleijel::MonotonicityCertificate& cert);

}  // namespace ballspec::io
