#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "ballspec/certificate.hpp"
#include "ballspec/spectrum.hpp"

namespace ballspec::courant {

using spectrum::BoundaryCondition;
using spectrum::EigenvalueRecord;

enum class Status {
  Sharp,
  ExcludedTwist,           // l >= 1 and m >= 2
  ExcludedRadialOrdering,  // l = 0, m >= 2
  ExcludedSphereLabel,     // l >= 2, m = 1, d >= 3
  ExcludedDirectCount,     // d = 2, m = 1, nodal count below label
};

std::string_view to_string(Status status);

struct SharpnessVerdict {
  EigenvalueRecord record;
  Status status = Status::ExcludedTwist;
  /// Nodal count when a concrete one is known for the eigenspace.
  std::optional<std::uint64_t> mu;
  std::vector<Inequality> certificate;
};

/// Minimal label of the sphere eigenvalue l(l+d-2) on S^{d-1}, and the bound
/// on nodal counts that Courant's theorem with antipodal symmetry gives.
struct SphereLabeling {
  int l = 0;
  int d = 3;
  std::uint64_t min_label = 1;
  std::uint64_t symmetry_bound = 2;
};

struct SphereResult {
  std::set<std::uint64_t> sharp_labels;
  std::vector<Inequality> certificate;
};

/// Nodal domains of J_l(z r) cos(l theta) on the disc: m radial bands times
/// 2l angular sectors (m when l = 0).
std::uint64_t nodal_count_disc(int l, int m, BoundaryCondition bc);

/// Dimension-checked form; only d = 2 is supported.
std::uint64_t nodal_count(int d, int l, int m, BoundaryCondition bc);

SphereLabeling sphere_labeling(int l, int d);

/// Courant-sharp labels of S^{d-1}, d >= 3: always {1, 2}, with the reduced
/// inequality 1 < C(l+d-3, d-2) certified exactly for l = 2..l_max.
SphereResult sphere_courant_sharp(int d, int l_max = 50);

/// Verdicts for every (l, m) with l <= lmax and m <= mmax, ordered by label.
std::vector<SharpnessVerdict> courant_sharp_ball(int d, BoundaryCondition bc, int lmax = 8,
                                                 int mmax = 4);

/// Verdicts for every record of an already enumerated table.
std::vector<SharpnessVerdict> courant_sharp_table(const spectrum::SpectrumTable& table);

std::set<std::uint64_t> sharp_labels(const std::vector<SharpnessVerdict>& verdicts);

}  // namespace ballspec::courant
