#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zeroloc/locus.hpp"
#include "zeroloc/model.hpp"
#include "zeroloc/series.hpp"

namespace zeroloc::cli {

/// R as a plain callable; nullopt where it is undefined.
using RFunction = std::function<std::optional<Complex>(Complex)>;

inline RFunction r_function(const StructuredFunction& s) {
  return [s](Complex z) -> std::optional<Complex> {
    try {
      return eval_R(s, z);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
}

/// R = -c E(z^2) / (z O(z^2)) for F(z) = E(z^2) + z O(z^2); it equals c
/// exactly at the zeros of F.
inline RFunction r_function(const SeriesFunction& series, Complex c) {
  auto [e, o] = split_even_odd(series);
  return [e = std::move(e), o = std::move(o), c](Complex z) -> std::optional<Complex> {
    const Complex w = z * z;
    const Complex den = z * o(w);
    if (den == Complex{}) return std::nullopt;
    const Complex r = -c * e(w) / den;
    if (!is_finite(r)) return std::nullopt;
    return r;
  };
}

inline std::string locus_csv(const std::vector<LocusSample>& samples) {
  std::string out = "r,phi,u_residual,arg_unwrapped\n";
  char buf[128];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.r, s.phi, s.u_residual, s.arg_unwrapped);
    out += buf;
  }
  return out;
}

struct PlotOptions {
  double half_width = 0.0;  ///< 0 picks 1.15 * the largest zero modulus
  int grid = 240;
  int size = 800;
};

namespace detail {

struct Segment {
  double x0, y0, x1, y1;
};

/// Zero level of a sampled scalar field by marching squares; cells touching
/// an undefined value are skipped.
inline std::vector<Segment> contour(const std::vector<std::optional<double>>& f, int n) {
  std::vector<Segment> segs;
  auto at = [&](int i, int j) { return f[static_cast<std::size_t>(j) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(i)]; };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const auto a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
      if (!a || !b || !c || !d) continue;
      const double v[4] = {*a, *b, *c, *d};
      const double px[4] = {double(i), double(i + 1), double(i + 1), double(i)};
      const double py[4] = {double(j), double(j), double(j + 1), double(j + 1)};
      std::vector<std::pair<double, double>> pts;
      for (int e = 0; e < 4; ++e) {
        const int e2 = (e + 1) % 4;
        if ((v[e] < 0) != (v[e2] < 0)) {
          const double t = v[e] / (v[e] - v[e2]);
          pts.emplace_back(px[e] + t * (px[e2] - px[e]), py[e] + t * (py[e2] - py[e]));
        }
      }
      if (pts.size() == 2) {
        segs.push_back({pts[0].first, pts[0].second, pts[1].first, pts[1].second});
      } else if (pts.size() == 4) {
        segs.push_back({pts[0].first, pts[0].second, pts[1].first, pts[1].second});
        segs.push_back({pts[2].first, pts[2].second, pts[3].first, pts[3].second});
      }
    }
  }
  return segs;
}

}  // namespace detail

/// The level curve u = 0 (solid), the curves where R/|R| equals one of
/// c, -conj(c), -c, conj(c) (dashed) and the zeros (filled dots).
inline std::string locus_svg(const RFunction& R, Complex c, const std::vector<Complex>& zeros,
                             const PlotOptions& opt = {}) {
  double L = opt.half_width;
  if (!(L > 0)) {
    for (const auto& z : zeros) L = std::max(L, std::abs(z));
    L = L > 0 ? 1.15 * L : 2.0;
  }
  const int n = opt.grid;
  const std::size_t cells = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
  std::vector<std::optional<double>> u(cells), s1(cells), s2(cells);
  const Complex cc = std::conj(c);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      // Half-cell offset keeps the origin and the axes off the grid nodes.
      const Complex z{-L + 2 * L * (i + 0.5) / (n + 1), L - 2 * L * (j + 0.5) / (n + 1)};
      const auto r = R(z);
      const std::size_t k = static_cast<std::size_t>(j) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(i);
      if (!r || std::abs(*r) == 0.0) continue;
      const double m = std::abs(*r);
      u[k] = std::log(m);
      s1[k] = (cc * *r).imag() / m;
      s2[k] = (c * *r).imag() / m;
    }
  }
  const double scale = static_cast<double>(opt.size) / (n + 1);
  auto px = [&](double gx) { return (gx + 0.5) * scale; };
  auto to_px = [&](Complex z) {
    return std::pair<double, double>{(z.real() + L) / (2 * L) * opt.size, (L - z.imag()) / (2 * L) * opt.size};
  };

  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                opt.size, opt.size, opt.size, opt.size);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const auto [ox, oy] = to_px(Complex{});
  std::snprintf(buf, sizeof buf,
                "<g stroke=\"#999\" stroke-width=\"1\"><line x1=\"0\" y1=\"%.2f\" x2=\"%d\" y2=\"%.2f\"/>"
                "<line x1=\"%.2f\" y1=\"0\" x2=\"%.2f\" y2=\"%d\"/></g>\n",
                oy, opt.size, oy, ox, ox, opt.size);
  out += buf;

  auto emit = [&](const std::vector<detail::Segment>& segs, const char* attrs) {
    out += "<path ";
    out += attrs;
    out += " fill=\"none\" d=\"";
    for (const auto& s : segs) {
      std::snprintf(buf, sizeof buf, "M%.2f %.2fL%.2f %.2f", px(s.x0), px(s.y0), px(s.x1), px(s.y1));
      out += buf;
    }
    out += "\"/>\n";
  };
  emit(detail::contour(s1, n), "class=\"target\" stroke=\"#d62728\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"");
  emit(detail::contour(s2, n), "class=\"target\" stroke=\"#2ca02c\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"");
  emit(detail::contour(u, n), "class=\"level\" stroke=\"#1f77b4\" stroke-width=\"2\"");

  for (const auto& z : zeros) {
    const auto [x, y] = to_px(z);
    std::snprintf(buf, sizeof buf, "<circle class=\"zero\" cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"black\"/>\n", x, y);
    out += buf;
  }
  std::snprintf(buf, sizeof buf,
                "<g font-family=\"sans-serif\" font-size=\"14\">"
                "<text x=\"12\" y=\"22\" fill=\"#1f77b4\">u(z)=0</text>"
                "<text x=\"12\" y=\"42\" fill=\"#d62728\">R(z)/|R(z)|=c, -c</text>"
                "<text x=\"12\" y=\"62\" fill=\"#2ca02c\">R(z)/|R(z)|=conj(c), -conj(c)</text>"
                "<text x=\"12\" y=\"%d\" fill=\"#333\">window |Re z|, |Im z| &lt;= %.4g</text></g>\n",
                opt.size - 12, L);
  out += buf;
  out += "</svg>\n";
  return out;
}

}  // namespace zeroloc::cli
