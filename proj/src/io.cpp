#include "ballspec/io.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "ballspec/errors.hpp"

namespace ballspec::io {

Rounded round_half_away(double value, int decimals) {
  if (!std::isfinite(value) || decimals < 0 || decimals > 17) {
    throw InvalidArgument("io", "cannot round a non-finite value");
  }
  // Every double has a finite decimal expansion of at most 1074 fraction
  // digits, so this string is exact.
  std::string exact = fmt::format("{:.1100f}", std::fabs(value));
  const auto point = exact.find('.');
  std::string kept = exact.substr(0, point) + exact.substr(point + 1, decimals);
  const std::string rest = exact.substr(point + 1 + decimals);

  Rounded out;
  const bool at_least_half = !rest.empty() && rest[0] >= '5';
  out.tie = !rest.empty() && rest[0] == '5' && rest.find_first_not_of('0', 1) == std::string::npos;
  if (at_least_half) {
    int i = static_cast<int>(kept.size()) - 1;
    while (i >= 0 && kept[i] == '9') kept[i--] = '0';
    if (i < 0) {
      kept.insert(kept.begin(), '1');
    } else {
      ++kept[i];
    }
  }
  const std::size_t int_digits = kept.size() - static_cast<std::size_t>(decimals);
  std::string text = kept.substr(0, int_digits);
  if (decimals > 0) text += "." + kept.substr(int_digits);
  const bool negative = std::signbit(value) && text.find_first_not_of("0.") != std::string::npos;
  out.text = negative ? "-" + text : text;
  return out;
}

std::string full_precision(double value) { return fmt::format("{:.17g}", value); }

Json to_json(const spectrum::EigenvalueRecord& r) {
  return Json{{"d", r.d},
              {"bc", spectrum::to_string(r.bc)},
              {"l", r.l},
              {"m", r.m},
              {"zero", r.zero},
              {"lambda", r.lambda},
              {"multiplicity", r.multiplicity},
              {"label_first", r.label_first},
              {"label_last", r.label_last}};
}

Json to_json(const spectrum::SpectrumTable& table) {
  Json records = Json::array();
  for (const auto& r : table.records) records.push_back(to_json(r));
  return Json{{"d", table.d},
              {"bc", spectrum::to_string(table.bc)},
              {"lambda_max", table.lambda_max},
              {"records", std::move(records)}};
}

std::string to_csv(const spectrum::SpectrumTable& table) {
  std::string out = "d,bc,l,m,zero,lambda,multiplicity,label_first,label_last\n";
  for (const auto& r : table.records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.d, spectrum::to_string(r.bc), r.l, r.m,
                       full_precision(r.zero), full_precision(r.lambda), r.multiplicity,
                       r.label_first, r.label_last);
  }
  return out;
}

std::string to_text(const spectrum::SpectrumTable& table) {
  std::string out = fmt::format("{:>6} {:>4} {:>4} {:>20} {:>22} {:>6}  labels\n", "d", "l", "m",
                                "zero", "lambda", "mult");
  for (const auto& r : table.records) {
    out += fmt::format("{:>6} {:>4} {:>4} {:>20.15f} {:>22.15f} {:>6}  {}-{}\n", r.d, r.l, r.m,
                       r.zero, r.lambda, r.multiplicity, r.label_first, r.label_last);
  }
  return out;
}

Json to_json(const Inequality& q) {
  return Json{{"name", q.name}, {"lhs", q.lhs}, {"rhs", q.rhs}};
}

Json to_json(const std::vector<courant::SharpnessVerdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) {
    Json cert = Json::array();
    for (const auto& q : v.certificate) cert.push_back(to_json(q));
    out.push_back(Json{{"l", v.record.l},
                       {"m", v.record.m},
                       {"bc", spectrum::to_string(v.record.bc)},
                       {"status", courant::to_string(v.status)},
                       {"label_first", v.record.label_first},
                       {"mu", v.mu ? Json(*v.mu) : Json(nullptr)},
                       {"certificate", std::move(cert)}});
  }
  return out;
}

std::string to_text(const std::vector<courant::SharpnessVerdict>& verdicts) {
  std::string out;
  for (const auto& v : verdicts) {
    out += fmt::format("l={:<3} m={:<3} label={:<6} mu={:<6} {}\n", v.record.l, v.record.m,
                       v.record.label_first, v.mu ? std::to_string(*v.mu) : "-",
                       courant::to_string(v.status));
  }
  return out;
}

Json to_json(const std::vector<pleijel::PleijelRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"d", r.d},
                       {"gamma", r.gamma},
                       {"log_gamma", r.log_gamma_value},
                       {"quotient", r.quotient_next ? Json(*r.quotient_next) : Json(nullptr)}});
  }
  return out;
}

std::string to_csv(const std::vector<pleijel::PleijelRow>& rows, bool table_mode) {
  auto number = [&](double v) {
    return table_mode ? round_half_away(v, 6).text : full_precision(v);
  };
  std::string out = "d,gamma,quotient\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{}\n", r.d, number(r.gamma),
                       r.quotient_next ? number(*r.quotient_next) : std::string());
  }
  return out;
}

std::string to_text(const std::vector<pleijel::PleijelRow>& rows) {
  std::string out = fmt::format("{:>4}  {:>10}  {:>10}\n", "d", "gamma(d)", "quotient");
  for (const auto& r : rows) {
    out += fmt::format("{:>4}  {:>10}  {:>10}\n", r.d, round_half_away(r.gamma, 6).text,
                       r.quotient_next ? round_half_away(*r.quotient_next, 6).text : "");
  }
  return out;
}

Json plot_json(const std::vector<std::pair<int, double>>& curve) {
  Json xs = Json::array();
  Json ys = Json::array();
  for (const auto& [d, q] : curve) {
    xs.push_back(d);
    ys.push_back(q);
  }
  return Json{{"x", std::move(xs)}, {"y", std::move(ys)}, {"hline", 2 / std::numbers::e}};
}

std::string to_csv(const std::vector<std::pair<int, double>>& curve) {
  std::string out = "d,quotient\n";
  for (const auto& [d, q] : curve) out += fmt::format("{},{}\n", d, full_precision(q));
  return out;
}

Json to_json(const pleijel::MonotonicityCertificate& cert) {
  Json checks = Json::array();
  for (const auto& q : cert.checks) {
    checks.push_back(Json{{"name", q.name},
                          {"lhs", q.lhs},
                          {"rhs", q.rhs},
                          {"margin", q.margin()},
                          {"exact", q.exact},
                          {"holds", q.holds}});
  }
  auto fraction = [](const BigRational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
  };
  return Json{{"d", cert.d},
              {"checks", std::move(checks)},
              {"final_bound", fraction(cert.final_bound_exact)},
              {"poly_spot_value_d4", fraction(cert.poly_spot_value)},
              {"poly_factorization_exact", cert.poly_factorization_exact},
              {"passed", cert.all_hold()}};
}

}  // namespace ballspec::io
