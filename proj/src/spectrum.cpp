#include "ballspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "ballspec/bessel.hpp"
#include "ballspec/binomial.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/parallel.hpp"
#include "ballspec/zeros.hpp"

namespace ballspec::spectrum {

std::string_view to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "neumann";
}

BoundaryCondition parse_boundary_condition(std::string_view text) {
  if (text == "dirichlet") return BoundaryCondition::Dirichlet;
  if (text == "neumann") return BoundaryCondition::Neumann;
  throw InvalidArgument("spectrum", "boundary condition must be dirichlet or neumann");
}

std::optional<EigenvalueRecord> SpectrumTable::find(int l, int m) const {
  for (const auto& r : records) {
    if (r.l == l && r.m == m) return r;
  }
  return std::nullopt;
}

namespace {

void check_dimension(int d) {
  if (d < 2) throw InvalidArgument("spectrum", "dimension d must be >= 2");
}

zeros::RootKind root_kind(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ? zeros::RootKind::DirichletXi
                                            : zeros::RootKind::NeumannXiPrime;
}

}  // namespace

std::uint64_t multiplicity(int l, int d) {
  check_dimension(d);
  if (l < 0) throw InvalidArgument("spectrum", "negative degree l");
  return binomial(l + d - 1, d - 1) - binomial(static_cast<std::int64_t>(l) + d - 3, d - 1);
}

double radial_zero(int d, BoundaryCondition bc, int l, int m) {
  check_dimension(d);
  return bc == BoundaryCondition::Dirichlet ? zeros::dirichlet_zero(l, d, m)
                                            : zeros::neumann_zero(l, d, m);
}

SpectrumTable enumerate(int d, BoundaryCondition bc, double lambda_max) {
  check_dimension(d);
  if (!(lambda_max >= 0.0) || lambda_max > bessel::kMaxArgument * bessel::kMaxArgument) {
    throw RangeError("spectrum", "lambda_max must lie in [0, 200^2]");
  }
  const double cutoff = lambda_max + kCutoffSlack;
  const double r_max = std::min(std::sqrt(cutoff), bessel::kMaxArgument);
  const auto kind = root_kind(bc);

  // Degrees whose first zero can still be below the cutoff. The zero-free
  // bound grows with l, so the loop ends.
  std::vector<int> degrees;
  // The Neumann ground state lambda = 0 is always present.
  const bool ground = bc == BoundaryCondition::Neumann;
  for (int l = 0; (ground && l == 0) || zeros::zero_free_below(kind, l, d) <= r_max; ++l) {
    if (0.5 * (2 * l + d - 2) > bessel::kMaxOrder) {
      throw RangeError("spectrum", "cutoff requires Bessel orders beyond 120");
    }
    degrees.push_back(l);
  }

  std::vector<std::vector<EigenvalueRecord>> per_degree(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t i) {
    const int l = degrees[i];
    const auto mult = multiplicity(l, d);
    auto& out = per_degree[i];
    int m = 1;
    if (bc == BoundaryCondition::Neumann && l == 0) {
      out.push_back({d, bc, 0, m++, 0.0, 0.0, mult, 0, 0});
    }
    for (double z : zeros::zeros_up_to(kind, l, d, r_max)) {
      const double lambda = z * z;
      if (lambda > cutoff) break;
      out.push_back({d, bc, l, m++, z, lambda, mult, 0, 0});
    }
  });

  SpectrumTable table{d, bc, lambda_max, {}};
  for (auto& block : per_degree) {
    table.records.insert(table.records.end(), block.begin(), block.end());
  }
  std::sort(table.records.begin(), table.records.end(),
            [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
              if (a.lambda != b.lambda) return a.lambda < b.lambda;
              return a.l < b.l;
            });

  std::uint64_t next_label = 1;
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    auto& r = table.records[i];
    if (i > 0) {
      const auto& p = table.records[i - 1];
      if (!(r.lambda - p.lambda > 1e-8 * std::max(1.0, r.lambda))) {
        std::ostringstream os;
        os.precision(17);
        os << "eigenvalues (l=" << p.l << ", m=" << p.m << ") and (l=" << r.l << ", m=" << r.m
           << ") coincide numerically at lambda = " << r.lambda;
        throw DegenerateOrdering("spectrum", os.str());
      }
    }
    r.label_first = next_label;
    r.label_last = checked_add(next_label, r.multiplicity - 1);
    next_label = checked_add(r.label_last, 1);
  }
  return table;
}

std::uint64_t label_of(int d, BoundaryCondition bc, int l, int m) {
  const double z = radial_zero(d, bc, l, m);
  const auto table = enumerate(d, bc, z * z);
  if (const auto rec = table.find(l, m)) return rec->label_first;
  throw DegenerateOrdering("spectrum", "eigenvalue (l=" + std::to_string(l) + ", m=" +
                                           std::to_string(m) + ") missing from its own table");
}

double unit_ball_volume(int d) {
  check_dimension(d);
  return std::exp(0.5 * d * std::log(std::numbers::pi) - bessel::log_gamma(0.5 * d + 1));
}

double weyl_count(int d, double lambda) {
  if (!(lambda >= 0.0)) throw InvalidArgument("spectrum", "lambda must be >= 0");
  if (lambda == 0.0) return 0.0;
  const double omega = unit_ball_volume(d);
  return std::pow(2 * std::numbers::pi, -d) * omega * omega * std::pow(lambda, 0.5 * d);
}

}  // namespace ballspec::spectrum
