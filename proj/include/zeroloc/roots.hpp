#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "zeroloc/error.hpp"
#include "zeroloc/model.hpp"
#include "zeroloc/series.hpp"

namespace zeroloc {

struct Zero {
  Complex location;
  int multiplicity = 1;
};

/// Zeros sorted by modulus; equal moduli (within sort_tolerance relative)
/// ordered by ascending principal argument. `unconfirmed` holds roots of the
/// truncation that fall outside the trusted part of the disk.
struct ZeroList {
  std::vector<Zero> entries;
  std::vector<Zero> unconfirmed;
  double sort_tolerance = 1e-9;
  double trust_radius = std::numeric_limits<double>::infinity();
  double worst_residual = 0.0;
  std::size_t sweeps = 0;

  std::size_t count_with_multiplicity() const noexcept {
    std::size_t n = 0;
    for (const auto& z : entries) n += static_cast<std::size_t>(z.multiplicity);
    return n;
  }
};

struct RootOptions {
  int max_sweeps = 500;
  double residual_tol = 1e-11;
  double cluster_factor = 1e-6;
  double trust_safety = 0.8;
  double sort_tolerance = 1e-9;
};

namespace detail {

/// p(z)/p'(z) and |p(z)| / sum |c_k||z|^k. For |z| > 1 the reversed polynomial
/// is used so that large arguments never overflow.
struct NewtonRatio {
  Complex ratio;
  double residual;
};

inline NewtonRatio newton_ratio(const std::vector<Complex>& c, Complex z) {
  const std::size_t n = c.size() - 1;
  if (std::abs(z) <= 1.0) {
    Complex p{}, dp{};
    double mag = 0.0;
    const double r = std::abs(z);
    for (std::size_t k = n + 1; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
      mag = mag * r + std::abs(c[k]);
    }
    return {p / dp, mag > 0 ? std::abs(p) / mag : 0.0};
  }
  const Complex y = 1.0 / z;
  const double ry = std::abs(y);
  Complex q{}, dq{};
  double mag = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    dq = dq * y + q;
    q = q * y + c[k];
    mag = mag * ry + std::abs(c[k]);
  }
  // p(z) = z^n q(y), p'(z) = z^{n-1} (n q - y q').
  return {z * q / (static_cast<double>(n) * q - y * dq), mag > 0 ? std::abs(q) / mag : 0.0};
}

/// Initial moduli from the upper convex hull of (k, log|c_k|): each hull edge
/// of slope s and horizontal length m contributes m starting points of radius e^{-s}.
inline std::vector<double> newton_polygon_radii(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<std::size_t> idx;
  std::vector<double> lg(n + 1);
  for (std::size_t k = 0; k <= n; ++k) lg[k] = c[k] == Complex{} ? -1e300 : std::log(std::abs(c[k]));
  for (std::size_t k = 0; k <= n; ++k) {
    if (c[k] == Complex{}) continue;
    while (idx.size() >= 2) {
      std::size_t i0 = idx[idx.size() - 2], i1 = idx.back();
      double cross = (lg[i1] - lg[i0]) * static_cast<double>(k - i0) -
                     (lg[k] - lg[i0]) * static_cast<double>(i1 - i0);
      if (cross <= 0) idx.pop_back();
      else break;
    }
    idx.push_back(k);
  }
  std::vector<double> radii;
  for (std::size_t e = 0; e + 1 < idx.size(); ++e) {
    const double len = static_cast<double>(idx[e + 1] - idx[e]);
    const double r = std::exp((lg[idx[e]] - lg[idx[e + 1]]) / len);
    for (std::size_t m = 0; m < idx[e + 1] - idx[e]; ++m) radii.push_back(r);
  }
  return radii;
}

inline void sort_zeros(std::vector<Zero>& zs, double tol) {
  std::sort(zs.begin(), zs.end(), [](const Zero& x, const Zero& y) {
    return std::abs(x.location) < std::abs(y.location);
  });
  std::size_t start = 0;
  while (start < zs.size()) {
    std::size_t end = start + 1;
    while (end < zs.size()) {
      double m0 = std::abs(zs[end - 1].location), m1 = std::abs(zs[end].location);
      if (m1 - m0 > tol * std::max(1.0, m1)) break;
      ++end;
    }
    std::stable_sort(zs.begin() + static_cast<std::ptrdiff_t>(start), zs.begin() + static_cast<std::ptrdiff_t>(end),
                     [](const Zero& x, const Zero& y) { return std::arg(x.location) < std::arg(y.location); });
    start = end;
  }
}

}  // namespace detail

/// Merge raw roots closer than cluster_factor * max(1, |z|). Clusters are
/// grown transitively; the centre is the arithmetic mean and the
/// multiplicity the cluster size.
inline ZeroList cluster_multiplicities(const std::vector<Complex>& raw, double cluster_factor = 1e-6,
                                       double sort_tolerance = 1e-9) {
  const std::size_t n = raw.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      double scale = std::max({1.0, std::abs(raw[i]), std::abs(raw[k])});
      if (std::abs(raw[i] - raw[k]) < cluster_factor * scale) parent[find(i)] = find(k);
    }
  std::vector<Complex> sum(n);
  std::vector<int> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sum[find(i)] += raw[i];
    ++count[find(i)];
  }
  ZeroList out;
  out.sort_tolerance = sort_tolerance;
  for (std::size_t i = 0; i < n; ++i)
    if (count[i] > 0) out.entries.push_back({sum[i] / static_cast<double>(count[i]), count[i]});
  detail::sort_zeros(out.entries, sort_tolerance);
  return out;
}

/// All roots of the truncated polynomial by simultaneous (Aberth-Ehrlich)
/// iteration with synchronous sweeps. Roots beyond trust_safety times the
/// trust radius go to `unconfirmed`.
inline ZeroList find_roots(const SeriesFunction& series, const RootOptions& opt = {}) {
  std::vector<Complex> c = series.coeffs();
  while (c.size() > 1 && c.back() == Complex{}) c.pop_back();
  if (c.size() < 2) raise(ErrorKind::EmptyZeroList, "series has degree 0 after stripping trailing zeros");

  std::size_t at_origin = 0;
  while (c[at_origin] == Complex{}) ++at_origin;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(at_origin));

  std::vector<Complex> z;
  std::size_t sweeps = 0;
  double worst = 0.0;
  const std::size_t n = c.size() - 1;
  if (n > 0) {
    const auto radii = detail::newton_polygon_radii(c);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    z.resize(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(radii[k], golden * static_cast<double>(k) + 0.4);

    std::vector<bool> done(n, false);
    std::vector<Complex> next(n);
    std::vector<double> res(n, std::numeric_limits<double>::infinity());
    for (; sweeps < static_cast<std::size_t>(opt.max_sweeps); ++sweeps) {
      bool all = true;
      for (std::size_t i = 0; i < n; ++i) {
        next[i] = z[i];
        if (done[i]) continue;
        auto [ratio, r] = detail::newton_ratio(c, z[i]);
        res[i] = r;
        if (r < 2.0 * std::numeric_limits<double>::epsilon()) {
          done[i] = true;
          continue;
        }
        Complex sum{};
        for (std::size_t k = 0; k < n; ++k)
          if (k != i) sum += 1.0 / (z[i] - z[k]);
        Complex step = ratio / (1.0 - ratio * sum);
        if (!is_finite(step)) step = ratio;
        next[i] = z[i] - step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z[i]))
          done[i] = true;
        else
          all = false;
      }
      z.swap(next);
      if (all) break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      res[i] = detail::newton_ratio(c, z[i]).residual;
      worst = std::max(worst, res[i]);
    }
    if (worst >= opt.residual_tol)
      raise(ErrorKind::NoConvergence, "root iteration did not converge; worst residual " + std::to_string(worst));
  }
  for (std::size_t k = 0; k < at_origin; ++k) z.push_back(Complex{});

  ZeroList all = cluster_multiplicities(z, opt.cluster_factor, opt.sort_tolerance);
  ZeroList out;
  out.sort_tolerance = opt.sort_tolerance;
  out.trust_radius = series.trust_radius();
  out.worst_residual = worst;
  out.sweeps = sweeps;
  for (const auto& e : all.entries)
    (series.trust().contains(e.location, opt.trust_safety) ? out.entries : out.unconfirmed).push_back(e);
  return out;
}

/// Newton refinement on the structured F with the analytic derivative.
/// Stops when |step| < 1e-14 |z| or after 40 iterations. A cluster of
/// multiplicity m uses the modified step m F/F'.
inline Complex polish_on_function(const StructuredFunction& s, Complex z0, int multiplicity = 1) {
  Complex z = z0;
  const Complex start = z0;
  for (int it = 0; it < 40; ++it) {
    const Complex f = eval_F(s, z);
    if (f == Complex{}) return z;
    const Complex df = eval_dF(s, z);
    if (df == Complex{}) raise(ErrorKind::NewtonDiverged, "derivative vanished during Newton refinement");
    const Complex step = static_cast<double>(multiplicity) * f / df;
    if (!is_finite(step)) raise(ErrorKind::NewtonDiverged, "non-finite Newton step");
    z -= step;
    if (std::abs(z - start) > 1e3 * std::max(1.0, std::abs(start)))
      raise(ErrorKind::NewtonDiverged, "Newton iterate left the neighbourhood of the starting point");
    if (std::abs(step) < 1e-14 * std::max(std::abs(z), 1e-300)) return z;
  }
  const double scale = expand_to_series(s).magnitude(z);
  if (std::abs(eval_F(s, z)) > 1e-11 * scale)
    raise(ErrorKind::NewtonDiverged, "Newton refinement did not reach the residual tolerance");
  return z;
}

/// Zeros of a structured function: expansion, simultaneous iteration and
/// refinement of each cluster centre on F itself.
inline ZeroList find_zeros(const StructuredFunction& s, const RootOptions& opt = {}) {
  if (s.is_linear()) {
    ZeroList out;
    out.sort_tolerance = opt.sort_tolerance;
    out.entries.push_back({-s.f0() / s.g0(), 1});
    return out;
  }
  const SeriesFunction series = expand_to_series(s);
  ZeroList zl = find_roots(series, opt);
  for (auto& e : zl.entries) {
    try {
      Complex refined = polish_on_function(s, e.location, e.multiplicity);
      const double tol = opt.cluster_factor * std::max(1.0, std::abs(e.location));
      if (std::abs(refined - e.location) < std::max(tol, 1e-6)) e.location = refined;
    } catch (const Error&) {
      // Keep the unrefined root; its polynomial residual already passed.
    }
  }
  detail::sort_zeros(zl.entries, zl.sort_tolerance);
  return zl;
}

}  // namespace zeroloc
