#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "zeroloc/error.hpp"
#include "zeroloc/model.hpp"
#include "zeroloc/roots.hpp"

namespace zeroloc {

/// A point r e^{i phi} on the level curve ln|R| = 0 (or on a flat segment of
/// l at phi = 0 or pi/2) with a continuous branch of arg R.
struct LocusSample {
  double r = 0.0;
  double phi = 0.0;
  double u_residual = 0.0;
  double arg_unwrapped = 0.0;

  bool flat() const noexcept { return phi == 0.0 || phi == std::numbers::pi / 2; }
  Complex point() const noexcept { return std::polar(r, phi); }
};

/// Which of the four symmetric problems R(z) = c, -conj c, -c, conj c (for z
/// in the closed first quadrant) a c-point came from.
enum class CTarget { Direct = 1, NegConj = 2, Negated = 3, Conj = 4 };

struct CPoint {
  Complex location;
  int quadrant = 0;  ///< 1..4, or 0 when on an axis
  CTarget target = CTarget::Direct;
  double branch_r = 0.0;
};

namespace detail {

inline void require_nonlinear(const StructuredFunction& s) {
  if (s.is_linear())
    raise(ErrorKind::DegenerateMonotonicity, "f and z^j g both constant: u does not depend on the angle");
}

/// ln|R(z)| from the factor logs; returns +-inf at poles and zeros of R.
inline double u_raw(const StructuredFunction& s, Complex z) {
  const Complex w = z * z;
  double u = std::log(std::abs(s.f0())) - std::log(std::abs(s.g0())) -
             static_cast<double>(2 * s.j() + 1) * std::log(std::abs(z));
  for (double b : s.b()) u += std::log(std::abs(1.0 + w / b));
  for (double a : s.a()) u -= std::log(std::abs(1.0 - w / a));
  return u;
}

/// Principal value of arg R(z), summed factor by factor and wrapped into (-pi, pi].
inline double arg_raw(const StructuredFunction& s, Complex z) {
  const Complex w = z * z;
  double t = -static_cast<double>(2 * s.j() + 1) * std::arg(z);
  for (double b : s.b()) t += std::arg(1.0 + w / b);
  for (double a : s.a()) t -= std::arg(1.0 - w / a);
  t = std::remainder(t, 2.0 * std::numbers::pi);
  return t;
}

inline double nearest_branch(double principal, double reference) {
  const double two_pi = 2.0 * std::numbers::pi;
  return principal + two_pi * std::round((reference - principal) / two_pi);
}

inline int quadrant_of(Complex z, double tol = 1e-8) {
  const double scale = std::max(std::abs(z), 1e-300);
  const double x = z.real(), y = z.imag();
  if (std::abs(x) <= tol * scale || std::abs(y) <= tol * scale) return 0;
  if (x > 0) return y > 0 ? 1 : 4;
  return y > 0 ? 2 : 3;
}

}  // namespace detail

/// u(z) = ln|R(z)|.
inline double u_value(const StructuredFunction& s, Complex z) {
  detail::require_finite(z);
  const double u = detail::u_raw(s, z);
  if (!std::isfinite(u)) raise(ErrorKind::SingularInput, "z is a zero or pole of R");
  return u;
}

/// l(r): 0 if u(r) <= 0, pi/2 if u(ir) >= 0, otherwise the angle where
/// u(r e^{i phi}) vanishes (u is strictly decreasing in phi).
inline double l_of_r(const StructuredFunction& s, double r) {
  detail::require_nonlinear(s);
  if (!(r > 0.0) || !std::isfinite(r)) raise(ErrorKind::SingularRadius, "radius must be positive and finite");
  constexpr double half_pi = std::numbers::pi / 2;
  const double u0 = detail::u_raw(s, Complex{r, 0.0});
  const double u1 = detail::u_raw(s, Complex{0.0, r});
  if (std::isnan(u0) || std::isnan(u1)) raise(ErrorKind::SingularRadius, "u undefined at this radius");
  if (u0 <= 0.0) return 0.0;
  if (u1 >= 0.0) return half_pi;
  double lo = 0.0, hi = half_pi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (detail::u_raw(s, std::polar(r, mid)) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace detail {

inline LocusSample sample_at(const StructuredFunction& s, double r, double reference) {
  LocusSample out;
  out.r = r;
  out.phi = l_of_r(s, r);
  const Complex z = std::polar(r, out.phi);
  out.u_residual = u_raw(s, z);
  out.arg_unwrapped = nearest_branch(arg_raw(s, z), reference);
  return out;
}

/// Nudge a radius off sqrt(a), sqrt(b) where u is infinite on an axis.
inline double puncture(const StructuredFunction& s, double r) {
  auto shift = [&](double x) {
    const double root = std::sqrt(x);
    if (std::abs(r - root) <= 1e-9 * root) r = root * (1.0 + 2e-9);
  };
  for (double a : s.a()) shift(a);
  for (double b : s.b()) shift(b);
  return r;
}

inline constexpr double kMaxArgJump = std::numbers::pi / 2;
inline constexpr int kMaxRefineDepth = 12;

inline void refine(const StructuredFunction& s, const LocusSample& left, const LocusSample& right, int depth,
                   std::vector<LocusSample>& out) {
  if (std::abs(right.arg_unwrapped - left.arg_unwrapped) <= kMaxArgJump) return;
  if (depth >= kMaxRefineDepth)
    raise(ErrorKind::UnresolvedJump, "arg R jumps by more than pi/2 after maximal refinement");
  const double rm = puncture(s, std::sqrt(left.r * right.r));
  LocusSample mid = sample_at(s, rm, left.arg_unwrapped);
  refine(s, left, mid, depth + 1, out);
  out.push_back(mid);
  // The right sample was unwrapped against its old neighbour; re-anchor it.
  LocusSample r2 = right;
  r2.arg_unwrapped = nearest_branch(right.arg_unwrapped, mid.arg_unwrapped);
  refine(s, mid, r2, depth + 1, out);
}

}  // namespace detail

/// Samples of the branch r -> r e^{i l(r)} on a geometric grid, with
/// midpoints inserted wherever consecutive args differ by more than pi/2.
/// The first sample keeps the principal value of arg R.
inline std::vector<LocusSample> trace_branch(const StructuredFunction& s, double r_min, double r_max,
                                             std::size_t n_samples = 512) {
  detail::require_nonlinear(s);
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max))
    raise(ErrorKind::SingularRadius, "need 0 < r_min < r_max");
  if (n_samples < 2) raise(ErrorKind::SingularRadius, "need at least two samples");

  std::vector<LocusSample> out;
  const double ratio = std::log(r_max / r_min) / static_cast<double>(n_samples - 1);
  LocusSample prev = detail::sample_at(s, detail::puncture(s, r_min), 0.0);
  prev.arg_unwrapped = detail::arg_raw(s, prev.point());
  out.push_back(prev);
  for (std::size_t k = 1; k < n_samples; ++k) {
    double r = k + 1 == n_samples ? r_max : r_min * std::exp(ratio * static_cast<double>(k));
    LocusSample cur = detail::sample_at(s, detail::puncture(s, r), prev.arg_unwrapped);
    std::vector<LocusSample> inserted;
    detail::refine(s, prev, cur, 0, inserted);
    out.insert(out.end(), inserted.begin(), inserted.end());
    cur.arg_unwrapped = detail::nearest_branch(cur.arg_unwrapped, out.back().arg_unwrapped);
    out.push_back(cur);
    prev = cur;
  }
  return out;
}

struct MonotoneReport {
  std::vector<std::size_t> decreases;     ///< index i where arg[i+1] < arg[i] - tol
  std::vector<std::size_t> flat_changes;  ///< index i where both ends are flat yet arg moved
  bool ok() const noexcept { return decreases.empty() && flat_changes.empty(); }
};

inline MonotoneReport check_arg_monotone(const std::vector<LocusSample>& samples, double tol = 1e-9) {
  MonotoneReport rep;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double d = samples[i + 1].arg_unwrapped - samples[i].arg_unwrapped;
    if (d < -tol) rep.decreases.push_back(i);
    if (samples[i].flat() && samples[i + 1].flat() && samples[i].phi == samples[i + 1].phi &&
        std::abs(d) >= tol)
      rep.flat_changes.push_back(i);
  }
  return rep;
}

namespace detail {

/// Smallest r in [lo, hi] (to relative 1e-15) where pred flips from false to
/// true, given pred(lo) false and pred(hi) true.
template <class Pred>
double bisect_radius(double lo, double hi, Pred pred) {
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

inline Complex map_target(Complex z, CTarget t) {
  switch (t) {
    case CTarget::Direct: return z;
    case CTarget::NegConj: return -std::conj(z);
    case CTarget::Negated: return -z;
    case CTarget::Conj: return std::conj(z);
  }
  return z;
}

}  // namespace detail

/// Solutions of R(z) = c found on the traced branch. For each target level
/// theta in {arg c, pi - arg c, pi + arg c, -arg c} (mod 2 pi) the crossing
/// radius is located by bisection, and the first-quadrant solution is mapped
/// by z, -conj z, -z, conj z respectively. Flat stretches of the branch
/// sitting exactly at a level contribute both endpoints. Every point is
/// refined by Newton on F and kept only if |F| < 1e-8 times its magnitude scale.
inline std::vector<CPoint> locate_c_points(const StructuredFunction& s, double r_min, double r_max,
                                           std::size_t n_samples = 512) {
  const auto samples = trace_branch(s, r_min, r_max, n_samples);
  const Complex c = constant_c(s);
  const double theta = std::arg(c);
  const double pi = std::numbers::pi;
  const SeriesFunction series = expand_to_series(s);

  // Continuous arg at an arbitrary radius, anchored on the bracketing samples.
  auto arg_at = [&](double r, std::size_t left) {
    return detail::sample_at(s, r, samples[left].arg_unwrapped).arg_unwrapped;
  };

  struct Target {
    double level;
    CTarget kind;
  };
  const Target targets[] = {{theta, CTarget::Direct},
                            {pi - theta, CTarget::NegConj},
                            {pi + theta, CTarget::Negated},
                            {-theta, CTarget::Conj}};

  const double a_min = samples.front().arg_unwrapped;
  const double a_max = samples.back().arg_unwrapped;
  constexpr double level_tol = 1e-12;

  std::vector<CPoint> out;
  auto add = [&](double r, CTarget kind) {
    const double phi = l_of_r(s, r);
    Complex z = detail::map_target(std::polar(r, phi), kind);
    try {
      z = polish_on_function(s, z);
    } catch (const Error&) {
      return;
    }
    if (std::abs(eval_F(s, z)) >= 1e-8 * series.magnitude(z)) return;
    for (const auto& p : out)
      if (std::abs(p.location - z) < 1e-7 * std::max(1.0, std::abs(z))) return;
    out.push_back({z, detail::quadrant_of(z), kind, r});
  };

  for (const auto& t : targets) {
    const double two_pi = 2.0 * pi;
    for (double level = t.level + two_pi * std::ceil((a_min - level_tol - t.level) / two_pi);
         level <= a_max + level_tol; level += two_pi) {
      // Enter: first sample with arg >= level; exit: first sample with arg > level.
      std::size_t i_in = 0;
      while (i_in < samples.size() && samples[i_in].arg_unwrapped < level - level_tol) ++i_in;
      if (i_in == samples.size()) continue;
      std::size_t i_out = i_in;
      while (i_out < samples.size() && samples[i_out].arg_unwrapped <= level + level_tol) ++i_out;

      std::vector<double> radii;
      if (i_in > 0) {
        const std::size_t left = i_in - 1;
        radii.push_back(detail::bisect_radius(samples[left].r, samples[i_in].r, [&](double r) {
          return arg_at(r, left) >= level - level_tol;
        }));
      } else {
        radii.push_back(samples[0].r);
      }
      if (i_out < samples.size() && i_out > 0) {
        const std::size_t left = i_out - 1;
        radii.push_back(detail::bisect_radius(samples[left].r, samples[i_out].r, [&](double r) {
          return arg_at(r, left) > level + level_tol;
        }));
      }
      for (double r : radii) add(r, t.kind);
    }
  }
  std::sort(out.begin(), out.end(), [](const CPoint& x, const CPoint& y) {
    const double mx = std::abs(x.location), my = std::abs(y.location);
    if (mx != my) return mx < my;
    return std::arg(x.location) < std::arg(y.location);
  });
  return out;
}

/// Where the curve u = 0 is first reached. The expected picture is l = pi/2
/// there (the imaginary axis meets u = 0 before any other ray) with
/// arg R = (-1)^{j+1} pi/2.
struct FirstCrossing {
  double r = 0.0;
  double l = 0.0;
  double arg = 0.0;
  bool on_axis = false;
  bool arg_matches = false;
};

inline FirstCrossing first_crossing(const StructuredFunction& s, double r_lo = 1e-8, double r_hi = 1e8) {
  detail::require_nonlinear(s);
  auto u_imag = [&](double r) { return detail::u_raw(s, Complex{0.0, r}); };
  // u(ir) is +inf at the origin and decreases until it first reaches zero.
  double lo = r_lo;
  if (u_imag(lo) <= 0.0) raise(ErrorKind::SingularRadius, "u(ir) already nonpositive at the lower radius");
  double hi = lo;
  while (u_imag(hi) > 0.0) {
    lo = hi;
    hi *= 1.05;
    if (hi > r_hi) raise(ErrorKind::SingularRadius, "no crossing below the upper radius");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    (u_imag(mid) <= 0.0 ? hi : lo) = mid;
  }
  // lo is the last radius with u(ir) > 0, i.e. the crossing approached from inside.
  const double r = lo;
  FirstCrossing fc;
  fc.r = r;
  fc.l = l_of_r(s, r);
  fc.on_axis = fc.l == 0.0 || fc.l == std::numbers::pi / 2;
  fc.arg = detail::arg_raw(s, Complex{0.0, r});
  const double expected = (s.j() % 2 == 0 ? -1.0 : 1.0) * std::numbers::pi / 2;
  fc.arg_matches = std::abs(fc.arg - expected) < 1e-10;
  return fc;
}

}  // namespace zeroloc
