#include "ballspec/courant.hpp"

#include <algorithm>
#include <string>

#include "ballspec/binomial.hpp"
#include "ballspec/errors.hpp"

namespace ballspec::courant {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Sharp: return "Sharp";
    case Status::ExcludedTwist: return "ExcludedTwist";
    case Status::ExcludedRadialOrdering: return "ExcludedRadialOrdering";
    case Status::ExcludedSphereLabel: return "ExcludedSphereLabel";
    case Status::ExcludedDirectCount: return "ExcludedDirectCount";
  }
  return "Unknown";
}

std::uint64_t nodal_count_disc(int l, int m, BoundaryCondition /*bc*/) {
  if (l < 0 || m < 1) throw InvalidArgument("courant", "need l >= 0 and m >= 1");
  if (l == 0) return static_cast<std::uint64_t>(m);
  return 2 * static_cast<std::uint64_t>(l) * static_cast<std::uint64_t>(m);
}

std::uint64_t nodal_count(int d, int l, int m, BoundaryCondition bc) {
  if (d != 2) {
    throw Unsupported("courant", "nodal counts are only computed for the disc (d = 2)");
  }
  return nodal_count_disc(l, m, bc);
}

SphereLabeling sphere_labeling(int l, int d) {
  if (d < 3) throw InvalidArgument("courant", "sphere labeling needs d >= 3");
  if (l < 0) throw InvalidArgument("courant", "negative degree l");
  SphereLabeling s{l, d, 1, 0};
  const std::int64_t n = l;
  if (l == 1) {
    s.min_label = 2;
  } else if (l >= 2) {
    s.min_label = checked_add(1, checked_add(binomial(n + d - 2, d - 1), binomial(n + d - 3, d - 1)));
  }
  const auto same_parity = checked_add(binomial(n + d - 3, d - 1), 1);
  s.symmetry_bound = checked_add(same_parity, same_parity);
  return s;
}

namespace {

// Both sides of the labeling inequality for degree l on S^{d-1}, decided in
// exact integers.
std::vector<Inequality> sphere_checks(int l, int d) {
  const std::int64_t n = l;
  const BigInt reduced = binomial_exact(n + d - 3, d - 2);
  Inequality r;
  r.name = "1 < C(l+d-3, d-2) [l=" + std::to_string(l) + "]";
  r.lhs = 1.0;
  r.rhs = reduced.convert_to<double>();
  r.exact = true;
  r.holds = BigInt(1) < reduced;

  const BigInt below = binomial_exact(n + d - 3, d - 1);
  const BigInt bound = 2 * (below + 1);
  const BigInt label = 1 + binomial_exact(n + d - 2, d - 1) + below;
  Inequality full;
  full.name = "symmetry_bound < min_label [l=" + std::to_string(l) + "]";
  full.lhs = bound.convert_to<double>();
  full.rhs = label.convert_to<double>();
  full.exact = true;
  full.holds = bound < label;
  return {r, full};
}

Inequality radial_ordering(int d, BoundaryCondition bc) {
  const double z11 = spectrum::radial_zero(d, bc, 1, 1);
  const double z02 = spectrum::radial_zero(d, bc, 0, 2);
  return strictly_less("lambda_{1,1} < lambda_{0,2}", z11 * z11, z02 * z02);
}

Inequality count_below_label(std::uint64_t mu, std::uint64_t label) {
  Inequality q = strictly_less("mu < label_first", static_cast<double>(mu), static_cast<double>(label));
  q.exact = true;
  q.holds = mu < label;
  return q;
}

[[noreturn]] void label_mismatch(const EigenvalueRecord& r, std::uint64_t expected) {
  throw CertificateFailure("courant", "eigenvalue (l=" + std::to_string(r.l) + ", m=" +
                                          std::to_string(r.m) + ") has label " +
                                          std::to_string(r.label_first) + ", expected " +
                                          std::to_string(expected));
}

SharpnessVerdict judge(const EigenvalueRecord& r, const Inequality& ordering) {
  SharpnessVerdict v;
  v.record = r;
  const int d = r.d;

  if (r.l >= 1 && r.m >= 2) {
    // Twisting excludes these outright; no numerics involved.
    v.status = Status::ExcludedTwist;
    if (d == 2) v.mu = nodal_count_disc(r.l, r.m, r.bc);
    return v;
  }
  if (r.l == 0 && r.m == 1) {
    v.mu = 1;
    if (r.label_first != 1) label_mismatch(r, 1);
    v.status = Status::Sharp;
    return v;
  }
  if (r.l == 1 && r.m == 1) {
    v.mu = 2;
    v.certificate.push_back(ordering);
    if (r.label_first != 2) label_mismatch(r, 2);
    v.status = Status::Sharp;
    return v;
  }
  if (r.l == 0) {
    // Radial eigenfunctions have m nodal shells; the ordering puts at least
    // one extra eigenvalue below.
    v.status = Status::ExcludedRadialOrdering;
    v.mu = static_cast<std::uint64_t>(r.m);
    v.certificate.push_back(ordering);
    v.certificate.push_back(count_below_label(*v.mu, r.label_first));
    return v;
  }
  // l >= 2, m = 1
  if (d >= 3) {
    v.status = Status::ExcludedSphereLabel;
    v.certificate = sphere_checks(r.l, d);
    return v;
  }
  v.mu = nodal_count_disc(r.l, r.m, r.bc);
  if (*v.mu == r.label_first) {
    v.status = Status::Sharp;
  } else if (*v.mu < r.label_first) {
    v.status = Status::ExcludedDirectCount;
    v.certificate.push_back(count_below_label(*v.mu, r.label_first));
  } else {
    throw CertificateFailure("courant", "nodal count exceeds label for (l=" + std::to_string(r.l) +
                                            ", m=1): Courant bound violated");
  }
  return v;
}

}  // namespace

SphereResult sphere_courant_sharp(int d, int l_max) {
  if (d < 3) throw InvalidArgument("courant", "sphere result needs d >= 3");
  if (l_max < 2) throw InvalidArgument("courant", "l_max must be >= 2");
  SphereResult out;
  for (int l = 2; l <= l_max; ++l) {
    auto checks = sphere_checks(l, d);
    out.certificate.insert(out.certificate.end(), checks.begin(), checks.end());
  }
  require_all("courant", out.certificate);
  out.sharp_labels = {1, 2};
  return out;
}

std::vector<SharpnessVerdict> courant_sharp_table(const spectrum::SpectrumTable& table) {
  const Inequality ordering = radial_ordering(table.d, table.bc);
  std::vector<SharpnessVerdict> out;
  out.reserve(table.records.size());
  for (const auto& r : table.records) {
    out.push_back(judge(r, ordering));
    require_all("courant", out.back().certificate);
  }
  return out;
}

std::vector<SharpnessVerdict> courant_sharp_ball(int d, BoundaryCondition bc, int lmax, int mmax) {
  if (d < 2) throw InvalidArgument("courant", "dimension d must be >= 2");
  if (lmax < 0 || mmax < 1) throw InvalidArgument("courant", "need lmax >= 0 and mmax >= 1");
  // Zeros grow with m, so the largest eigenvalue of the (l, m) window sits in
  // the m = mmax column. Always include lambda_{0,2} and lambda_{1,1}, which
  // the labels of the window depend on.
  double cutoff = 0.0;
  for (int l = 0; l <= std::max(lmax, 1); ++l) {
    const double z = spectrum::radial_zero(d, bc, l, std::max(mmax, 2));
    cutoff = std::max(cutoff, z * z);
  }
  const auto table = spectrum::enumerate(d, bc, cutoff);
  spectrum::SpectrumTable window = table;
  window.records.clear();
  for (const auto& r : table.records) {
    if (r.l <= lmax && r.m <= mmax) window.records.push_back(r);
  }
  return courant_sharp_table(window);
}

std::set<std::uint64_t> sharp_labels(const std::vector<SharpnessVerdict>& verdicts) {
  std::set<std::uint64_t> out;
  for (const auto& v : verdicts) {
    if (v.status == Status::Sharp) out.insert(v.record.label_first);
  }
  return out;
}

}  // namespace ballspec::courant
