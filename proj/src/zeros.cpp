#include "ballspec/zeros.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ballspec/bessel.hpp"
#include "ballspec/detail/bessel_kernel.hpp"
#include "ballspec/errors.hpp"

namespace ballspec::zeros {
namespace {

using bessel::detail::real;

constexpr double kMaxStep = std::numbers::pi / 2;
constexpr double kTangencyFloor = 1e-290;
constexpr int kMaxHalvings = 6;

struct Sample {
  real f;
  real df;
};

// The function whose sign changes are located. Positive prefactors
// r^{(2-d)/2} are dropped; they do not move zeros.
class Target {
 public:
  Target(RootKind kind, int l, int d) : kind_(kind), l_(l), d_(d) {
    if (l < 0) throw InvalidArgument("zeros", "negative degree l");
    if (d < 2) throw InvalidArgument("zeros", "dimension d must be >= 2");
    nu_ = Order::for_ball(l, d);
    if (nu_.value() > bessel::kMaxOrder) {
      throw RangeError("zeros", "order " + nu_.to_string() + " exceeds the supported maximum 120");
    }
  }

  Sample at(double x) const {
    if (!(x > 0.0) || x > bessel::kMaxArgument) {
      throw RangeError("zeros", "search point outside (0, 200]");
    }
    const auto p = bessel::detail::j_pair(nu_.twice(), x);
    const real nu = nu_.twice() / real(2);
    if (kind_ != RootKind::NeumannXiPrime) {
      return {p.j, nu / x * p.j - p.j_next};
    }
    // g = r^{(d-2)/2} Xi'_l = (l/r) J_nu - J_{nu+1}; g' follows from the
    // radial equation: g' = -(d/2) g / r - (1 - l(l+d-2)/r^2) J_nu.
    const real g = real(l_) / x * p.j - p.j_next;
    const real big_l = real(l_) * (l_ + d_ - 2);
    const real dg = -(d_ / real(2)) * g / x - (1 - big_l / (real(x) * x)) * p.j;
    return {g, dg};
  }

  real lower_bound() const {
    // J_nu has no zero below sqrt(nu(nu+2)); Xi'_l (l >= 1) none below
    // sqrt(l(l+d-2)) since a first critical point is a maximum there.
    if (kind_ == RootKind::NeumannXiPrime) {
      if (l_ == 0) {
        const real nu1 = d_ / real(2);
        return std::sqrt(nu1 * (nu1 + 2));
      }
      return std::sqrt(real(l_) * (l_ + d_ - 2));
    }
    const real nu = nu_.twice() / real(2);
    return std::sqrt(nu * (nu + 2));
  }

  std::string describe() const {
    const char* name = kind_ == RootKind::BesselJ        ? "J"
                       : kind_ == RootKind::DirichletXi ? "Xi"
                                                         : "Xi'";
    return std::string(name) + "(l=" + std::to_string(l_) + ", d=" + std::to_string(d_) + ")";
  }

 private:
  RootKind kind_;
  int l_;
  int d_;
  Order nu_;
};

int sign(real v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

double scan_start(const Target& t) {
  return std::max(1e-3, static_cast<double>(0.98L * t.lower_bound()));
}

struct GridPoint {
  double x;
  Sample s;
};

GridPoint sample_point(const Target& t, double x, double step, double x_max) {
  Sample s = t.at(x);
  if (std::fabs(s.f) < kTangencyFloor) {
    // Nudge off an (almost) exact zero so the sign test is meaningful.
    const double moved = std::min(x + step / 7, x_max);
    if (moved != x) {
      x = moved;
      s = t.at(x);
    }
  }
  return {x, s};
}

// Cell [a, b] without a sign change but where |f| dips: locate the extremum
// and check whether the function crossed zero twice.
void check_dip(const Target& t, const GridPoint& a, const GridPoint& b) {
  const bool falling = sign(a.s.f) * sign(a.s.df) < 0;
  const bool rising = sign(b.s.f) * sign(b.s.df) > 0;
  if (!(falling && rising)) return;
  double lo = a.x;
  double hi = b.x;
  const int s_lo = sign(a.s.df);
  for (int i = 0; i < 60 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (sign(t.at(mid).df) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const real extreme = t.at(0.5 * (lo + hi)).f;
  if (sign(extreme) != sign(a.s.f)) {
    throw StepTooCoarse("zeros", "two zeros of " + t.describe() + " in one scan cell near x = " +
                                     std::to_string(a.x));
  }
}

std::vector<Bracket> scan(const Target& t, double from, double to, double step,
                          std::size_t stop_after = 0) {
  std::vector<Bracket> out;
  if (!(to > from)) return out;
  GridPoint prev = sample_point(t, from, step, to);
  double x = from;
  while (x < to) {
    x = std::min(from + step * std::round((x - from) / step + 1), to);
    const GridPoint cur = sample_point(t, x, step, to);
    if (cur.x <= prev.x) continue;
    if (sign(prev.s.f) * sign(cur.s.f) < 0) {
      out.push_back({prev.x, cur.x});
      if (stop_after != 0 && out.size() >= stop_after) return out;
    } else {
      check_dip(t, prev, cur);
    }
    prev = cur;
    x = cur.x;
  }
  return out;
}

double refine(const Target& t, Bracket b, double tol) {
  double lo = b.lo;
  double hi = b.hi;
  int s_lo = sign(t.at(lo).f);
  const int s_hi = sign(t.at(hi).f);
  if (s_lo * s_hi >= 0) {
    throw BracketFailure("zeros", "bracket of " + t.describe() + " lost its sign change");
  }
  auto bisect_to = [&](double rel) {
    for (int i = 0; i < 200 && hi - lo > rel * 0.5 * (lo + hi); ++i) {
      const double mid = 0.5 * (lo + hi);
      const int s = sign(t.at(mid).f);
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      if (s == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  };

  bisect_to(1e-10);
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 30; ++iter) {
    const Sample s = t.at(x);
    if (s.f == 0) return x;
    if (sign(s.f) == s_lo) {
      lo = x;
    } else {
      hi = x;
    }
    if (s.df == 0) break;
    const double next = static_cast<double>(x - s.f / s.df);
    if (!(next >= lo && next <= hi)) break;  // rejected: left the bracket
    const double delta = std::fabs(next - x);
    x = next;
    if (delta <= 0.25 * tol * x) return x;
  }
  bisect_to(tol);
  return 0.5 * (lo + hi);
}

void check_tol(double tol) {
  if (!(tol >= 1e-15 && tol <= 1e-3)) {
    throw InvalidArgument("zeros", "tolerance must lie in [1e-15, 1e-3]");
  }
}

std::vector<double> refine_all(const Target& t, const std::vector<Bracket>& brackets, double tol) {
  std::vector<double> roots;
  roots.reserve(brackets.size());
  for (const Bracket& b : brackets) {
    const double r = refine(t, b, tol);
    if (!(r >= b.lo && r <= b.hi) || (!roots.empty() && !(r > roots.back()))) {
      throw BracketFailure("zeros", "census of " + t.describe() + " produced out-of-order zeros");
    }
    roots.push_back(r);
  }
  return roots;
}

// m-th zero of the target counting from the origin.
double mth_zero(const Target& t, int m, double tol) {
  if (m < 1) throw InvalidArgument("zeros", "zero index m must be >= 1");
  check_tol(tol);
  for (int halving = 0; halving <= kMaxHalvings; ++halving) {
    const double step = kDefaultStep / (1 << halving);
    try {
      std::vector<Bracket> found;
      double from = scan_start(t);
      // McMahon-type guess for where the m-th zero lives; extended as needed.
      double to = std::min(bessel::kMaxArgument, from + (m + 2) * std::numbers::pi + 10);
      while (true) {
        auto more = scan(t, from, to, step, static_cast<std::size_t>(m) - found.size());
        found.insert(found.end(), more.begin(), more.end());
        if (found.size() >= static_cast<std::size_t>(m)) break;
        if (to >= bessel::kMaxArgument) {
          throw RangeError("zeros", "zero number " + std::to_string(m) + " of " + t.describe() +
                                        " lies beyond the supported range x <= 200");
        }
        from = to;
        to = std::min(bessel::kMaxArgument, to + 20);
      }
      found.resize(static_cast<std::size_t>(m));
      return refine_all(t, found, tol).back();
    } catch (const StepTooCoarse&) {
      if (halving == kMaxHalvings) throw;
    }
  }
  throw BracketFailure("zeros", "could not isolate zeros of " + t.describe());
}

}  // namespace

double bessel_zero(Order nu, int m, double tol) {
  // Order nu = l + d/2 - 1 with l = 0 needs d = 2 nu + 2.
  return mth_zero(Target(RootKind::BesselJ, 0, nu.twice() + 2), m, tol);
}

double dirichlet_zero(int l, int d, int m, double tol) {
  return mth_zero(Target(RootKind::DirichletXi, l, d), m, tol);
}

double neumann_zero(int l, int d, int m, double tol) {
  const Target t(RootKind::NeumannXiPrime, l, d);
  if (l == 0) {
    if (m < 1) throw InvalidArgument("zeros", "zero index m must be >= 1");
    check_tol(tol);
    if (m == 1) return 0.0;
    return mth_zero(t, m - 1, tol);
  }
  return mth_zero(t, m, tol);
}

double find_zero(const RootRequest& r) {
  switch (r.kind) {
    case RootKind::BesselJ:
      return mth_zero(Target(RootKind::BesselJ, r.l, r.d), r.m, r.tol);
    case RootKind::DirichletXi:
      return dirichlet_zero(r.l, r.d, r.m, r.tol);
    case RootKind::NeumannXiPrime:
      return neumann_zero(r.l, r.d, r.m, r.tol);
  }
  throw InvalidArgument("zeros", "unknown root kind");
}

std::vector<Bracket> scan_brackets(RootKind kind, int l, int d, double x_max, double step) {
  if (!(step > 0.0) || step > kMaxStep) {
    throw InvalidArgument("zeros", "scan step must lie in (0, pi/2]");
  }
  if (!(x_max > 0.0) || x_max > bessel::kMaxArgument) {
    throw RangeError("zeros", "x_max must lie in (0, 200]");
  }
  const Target t(kind, l, d);
  return scan(t, scan_start(t), x_max, step);
}

std::vector<double> zeros_up_to(RootKind kind, int l, int d, double x_max, double tol) {
  check_tol(tol);
  if (!(x_max > 0.0) || x_max > bessel::kMaxArgument) {
    throw RangeError("zeros", "x_max must lie in (0, 200]");
  }
  const Target t(kind, l, d);
  const double from = scan_start(t);
  for (int halving = 0;; ++halving) {
    try {
      return refine_all(t, scan(t, from, x_max, kDefaultStep / (1 << halving)), tol);
    } catch (const StepTooCoarse&) {
      if (halving == kMaxHalvings) throw;
    }
  }
}

double zero_free_below(RootKind kind, int l, int d) {
  return static_cast<double>(Target(kind, l, d).lower_bound());
}

}  // namespace ballspec::zeros
