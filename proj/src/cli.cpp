#include "ballspec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "ballspec/courant.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/io.hpp"
#include "ballspec/pleijel.hpp"
#include "ballspec/spectrum.hpp"
#include "ballspec/zeros.hpp"

namespace ballspec::cli {

namespace {

using io::Json;

struct Options {
  int d = 0;
  std::string bc;
  double lambda_max = -1.0;
  int l = 0;
  int m = 0;
  int count = 5;
  double nu = 0.0;
  std::string kind = "bessel";
  std::string format = "json";
  std::string output;
  double tol = zeros::kDefaultTol;
  int lmax = 8;
  int mmax = 4;
  int d_max = 0;
  bool verbose = false;
  bool fast = false;
  std::vector<int> table;
  std::vector<int> curve;
  int bound = 0;
};

// Thrown for flag combinations CLI11 cannot express.
struct Usage {
  std::string message;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

spectrum::BoundaryCondition boundary(const Options& o) {
  return spectrum::parse_boundary_condition(o.bc);
}

std::string cmd_spectrum(const Options& o) {
  const auto table = spectrum::enumerate(o.d, boundary(o), o.lambda_max);
  if (o.format == "csv") return io::to_csv(table);
  if (o.format == "table") return io::to_text(table);
  return dump(io::to_json(table));
}

std::string cmd_zeros(const Options& o, const CLI::App& sub) {
  Json out;
  std::vector<double> values;
  std::vector<int> indices;
  if (sub.count("--m") > 0) {
    indices.push_back(o.m);
  } else {
    for (int m = 1; m <= o.count; ++m) indices.push_back(m);
  }

  if (o.kind == "bessel") {
    if (sub.count("--nu") == 0) throw Usage{"zeros --kind bessel needs --nu"};
    const Order nu = Order::from_value(o.nu);
    for (int m : indices) values.push_back(zeros::bessel_zero(nu, m, o.tol));
    out["kind"] = o.kind;
    out["nu"] = nu.value();
  } else {
    if (sub.count("--l") == 0 || sub.count("--d") == 0) {
      throw Usage{"zeros --kind " + o.kind + " needs --l and --d"};
    }
    const auto kind = o.kind == "dirichlet" ? zeros::RootKind::DirichletXi
                                            : zeros::RootKind::NeumannXiPrime;
    for (int m : indices) values.push_back(zeros::find_zero({kind, o.l, o.d, m, o.tol}));
    out["kind"] = o.kind;
    out["l"] = o.l;
    out["d"] = o.d;
  }

  if (o.format == "csv" || o.format == "table") {
    std::string text = o.format == "csv" ? "m,zero\n" : fmt::format("{:>4}  {:>22}\n", "m", "zero");
    for (std::size_t i = 0; i < values.size(); ++i) {
      text += o.format == "csv" ? fmt::format("{},{}\n", indices[i], io::full_precision(values[i]))
                                : fmt::format("{:>4}  {:>22.17f}\n", indices[i], values[i]);
    }
    return text;
  }
  Json list = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    list.push_back(Json{{"m", indices[i]}, {"zero", values[i]}});
  }
  out["tol"] = o.tol;
  out["zeros"] = std::move(list);
  return dump(out);
}

std::string cmd_courant(const Options& o, const CLI::App& sub) {
  const auto bc = boundary(o);
  std::vector<courant::SharpnessVerdict> verdicts;
  if (sub.count("--lambda-max") > 0) {
    verdicts = courant::courant_sharp_table(spectrum::enumerate(o.d, bc, o.lambda_max));
  } else {
    verdicts = courant::courant_sharp_ball(o.d, bc, o.lmax, o.mmax);
  }
  const auto sharp = courant::sharp_labels(verdicts);
  std::optional<courant::SphereResult> sphere;
  if (o.d >= 3) sphere = courant::sphere_courant_sharp(o.d);

  if (o.format == "table") {
    std::string text = io::to_text(verdicts);
    text += "sharp labels:";
    for (auto n : sharp) text += " " + std::to_string(n);
    return text + "\n";
  }
  if (o.format == "csv") {
    std::string text = "l,m,label_first,mu,status\n";
    for (const auto& v : verdicts) {
      text += fmt::format("{},{},{},{},{}\n", v.record.l, v.record.m, v.record.label_first,
                          v.mu ? std::to_string(*v.mu) : "", courant::to_string(v.status));
    }
    return text;
  }
  Json out{{"d", o.d}, {"bc", spectrum::to_string(bc)}};
  out["sharp_labels"] = Json(std::vector<std::uint64_t>(sharp.begin(), sharp.end()));
  out["verdicts"] = io::to_json(verdicts);
  if (sphere) {
    Json cert = Json::array();
    for (const auto& q : sphere->certificate) cert.push_back(io::to_json(q));
    out["sphere"] = Json{{"sharp_labels", Json(std::vector<std::uint64_t>(
                                              sphere->sharp_labels.begin(), sphere->sharp_labels.end()))},
                         {"certificate", std::move(cert)}};
  }
  return dump(out);
}

std::string cmd_pleijel(const Options& o) {
  const int modes = (o.table.empty() ? 0 : 1) + (o.curve.empty() ? 0 : 1) + (o.bound != 0 ? 1 : 0);
  if (modes != 1) throw Usage{"pleijel needs exactly one of --table, --curve, --bound"};

  if (!o.table.empty()) {
    const auto rows = pleijel::gamma_table(o.table[0], o.table[1]);
    if (o.format == "csv") return io::to_csv(rows, true);
    if (o.format == "table") return io::to_text(rows);
    return dump(io::to_json(rows));
  }
  if (!o.curve.empty()) {
    const auto curve = pleijel::quotient_curve(o.curve[0], o.curve[1]);
    if (o.format == "csv" || o.format == "table") return io::to_csv(curve);
    return dump(io::plot_json(curve));
  }
  const double b = pleijel::neumann_pleijel_bound(o.bound);
  if (o.format == "csv") return fmt::format("d,bound\n{},{}\n", o.bound, io::full_precision(b));
  if (o.format == "table") return fmt::format("d={} bound={}\n", o.bound, io::round_half_away(b, 6).text);
  return dump(Json{{"d", o.bound}, {"bound", b}});
}

std::string cmd_certify(const Options& o) {
  const int last = o.d_max > 0 ? o.d_max : o.d;
  if (last < o.d) throw Usage{"--d-max must be >= --d"};
  Json list = Json::array();
  std::string text;
  for (int d = o.d; d <= last; ++d) {
    const auto cert = pleijel::monotonicity_certificate(d);
    if (o.format == "json") {
      list.push_back(io::to_json(cert));
    } else {
      for (const auto& q : cert.checks) {
        text += fmt::format("{},{},{},{},{}\n", d, q.name, io::full_precision(q.lhs),
                            io::full_precision(q.rhs), q.holds ? "holds" : "fails");
      }
    }
  }
  if (o.format != "json") return "d,name,lhs,rhs,status\n" + text;
  return dump(Json{{"certificates", std::move(list)}});
}

int cmd_selfcheck(const Options& o, std::ostream& out, std::ostream& err,
                  const selfcheck::JEvaluator& j_override) {
  const auto report = selfcheck::run({o.fast, j_override});
  for (const auto& r : report.outcomes) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
    if (o.verbose) out << fmt::format(" ({:.2f} s)", r.seconds);
    out << "\n";
  }
  if (const auto* f = report.first_failure()) {
    err << "selfcheck: " << f->name << " failed: " << f->detail << "\n";
    return 2;
  }
  out << "selfcheck: all " << report.outcomes.size() << " checks passed\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const selfcheck::JEvaluator& j_override) {
  Options o;
  CLI::App app{"Laplacian spectra on unit balls, Courant sharpness and Pleijel constants",
               "ballspec"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--verbose", o.verbose, "Print the version and timings to stderr");
  const std::vector<std::string> formats{"json", "csv", "table"};
  const std::vector<std::string> bcs{"dirichlet", "neumann"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--output", o.output, "Write results to this file instead of stdout");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Labeled eigenvalues up to a cutoff");
  spectrum_cmd->add_option("--d", o.d, "Dimension")->required()->check(CLI::Range(2, 1000));
  spectrum_cmd->add_option("--bc", o.bc, "dirichlet or neumann")->required()->check(CLI::IsMember(bcs));
  spectrum_cmd->add_option("--lambda-max", o.lambda_max, "Eigenvalue cutoff")->required();
  add_common(spectrum_cmd);

  auto* zeros_cmd = app.add_subcommand("zeros", "Bessel and radial zeros");
  zeros_cmd->add_option("--kind", o.kind, "bessel, dirichlet or neumann")
      ->check(CLI::IsMember({"bessel", "dirichlet", "neumann"}));
  zeros_cmd->add_option("--nu", o.nu, "Bessel order (integer or half-integer)");
  zeros_cmd->add_option("--l", o.l, "Degree")->check(CLI::NonNegativeNumber);
  zeros_cmd->add_option("--d", o.d, "Dimension")->check(CLI::Range(2, 1000));
  auto* m_opt = zeros_cmd->add_option("--m", o.m, "Single zero index")->check(CLI::PositiveNumber);
  zeros_cmd->add_option("--count", o.count, "Number of zeros from the first")
      ->check(CLI::Range(1, 1000))
      ->excludes(m_opt);
  zeros_cmd->add_option("--tol", o.tol, "Root tolerance")->check(CLI::Range(1e-15, 1e-3));
  add_common(zeros_cmd);

  auto* courant_cmd = app.add_subcommand("courant", "Courant sharpness verdicts");
  courant_cmd->add_option("--d", o.d, "Dimension")->required()->check(CLI::Range(2, 1000));
  courant_cmd->add_option("--bc", o.bc, "dirichlet or neumann")->required()->check(CLI::IsMember(bcs));
  auto* cut = courant_cmd->add_option("--lambda-max", o.lambda_max, "Judge every eigenvalue up to this cutoff");
  courant_cmd->add_option("--lmax", o.lmax, "Largest degree of the (l, m) window")
      ->check(CLI::NonNegativeNumber)
      ->excludes(cut);
  courant_cmd->add_option("--mmax", o.mmax, "Largest radial index of the window")
      ->check(CLI::PositiveNumber)
      ->excludes(cut);
  add_common(courant_cmd);

  auto* pleijel_cmd = app.add_subcommand("pleijel", "Pleijel constants and their quotients");
  pleijel_cmd->add_option("--table", o.table, "gamma(d) for d in [DMIN, DMAX]")->expected(2);
  pleijel_cmd->add_option("--curve", o.curve, "gamma(d+1)/gamma(d) for d in [DMIN, DMAX]")->expected(2);
  pleijel_cmd->add_option("--bound", o.bound, "Neumann Pleijel bound gamma(d-1) for d >= 3");
  add_common(pleijel_cmd);

  auto* certify_cmd = app.add_subcommand("certify", "Monotonicity certificate of gamma");
  certify_cmd->add_option("--d", o.d, "Dimension (>= 4)")->required();
  certify_cmd->add_option("--d-max", o.d_max, "Certify every dimension from --d to this one");
  add_common(certify_cmd);

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the invariant suite");
  selfcheck_cmd->add_flag("--fast", o.fast, "Reduced grids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.verbose) err << "ballspec " << kVersion << "\n";

  try {
    std::string result;
    if (app.got_subcommand(selfcheck_cmd)) return cmd_selfcheck(o, out, err, j_override);
    if (app.got_subcommand(spectrum_cmd)) {
      result = cmd_spectrum(o);
    } else if (app.got_subcommand(zeros_cmd)) {
      result = cmd_zeros(o, *zeros_cmd);
    } else if (app.got_subcommand(courant_cmd)) {
      result = cmd_courant(o, *courant_cmd);
    } else if (app.got_subcommand(pleijel_cmd)) {
      result = cmd_pleijel(o);
    } else {
      result = cmd_certify(o);
    }

    if (o.output.empty()) {
      out << result;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!(file << result)) {
        err << "error: cannot write " << o.output << "\n";
        return 1;
      }
    }
    return 0;
  } catch (const Usage& u) {
    err << "error: " << u.message << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.numerical() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ballspec::cli
