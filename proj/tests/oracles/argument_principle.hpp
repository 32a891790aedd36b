#pragma once

// Zero finder independent of the polynomial solver: winding numbers of F
// around recursively subdivided rectangles isolate the zeros, and a contour
// moment over a small circle gives each location.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Fn = std::function<Complex(Complex)>;

struct OracleZero {
  Complex location;
  int multiplicity = 1;
};

struct Box {
  double x0, x1, y0, y1;
  Complex center() const { return {(x0 + x1) / 2, (y0 + y1) / 2}; }
  double width() const { return std::max(x1 - x0, y1 - y0); }
};

class ArgumentPrinciple {
 public:
  ArgumentPrinciple(Fn f, Fn df) : f_(std::move(f)), df_(std::move(df)) {}

  /// Winding number of F around the box boundary, or nullopt when F nearly
  /// vanishes on it.
  std::optional<int> count(const Box& b) const {
    const Complex corners[5] = {{b.x0, b.y0}, {b.x1, b.y0}, {b.x1, b.y1}, {b.x0, b.y1}, {b.x0, b.y0}};
    double total = 0;
    for (int e = 0; e < 4; ++e) {
      auto t = edge(corners[e], corners[e + 1], 0);
      if (!t) return std::nullopt;
      total += *t;
    }
    return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
  }

  std::vector<OracleZero> zeros(const Box& root, double min_width = 1e-5) const {
    std::vector<OracleZero> out;
    auto n = count(root);
    if (!n) return out;
    solve(root, *n, min_width, out);
    return out;
  }

 private:
  Fn f_, df_;

  std::optional<double> edge(Complex a, Complex b, int depth) const {
    const Complex fa = f_(a), fb = f_(b);
    if (std::abs(fa) < 1e-300 || std::abs(fb) < 1e-300) return std::nullopt;
    const Complex m = (a + b) / 2.0;
    const Complex fm = f_(m);
    const double len = std::abs(b - a);
    // Small |F'/F| times the segment length bounds the argument change, so
    // a full turn cannot hide between samples.
    auto slow = [&](Complex z, Complex fz) { return std::abs(df_(z) / fz) * len < 0.5; };
    if (slow(a, fa) && slow(m, fm) && slow(b, fb)) return std::arg(fm / fa) + std::arg(fb / fm);
    if (depth > 40) return std::nullopt;
    auto l = edge(a, m, depth + 1);
    if (!l) return std::nullopt;
    auto r = edge(m, b, depth + 1);
    if (!r) return std::nullopt;
    return *l + *r;
  }

  /// Mean of the zeros inside |z - c| < r: (1/2 pi i) int z F'/F dz divided by the count.
  Complex moment(Complex c, double r, int n) const {
    constexpr int M = 256;
    Complex s1{};
    for (int k = 0; k < M; ++k) {
      const Complex e = std::polar(1.0, 2 * std::numbers::pi * k / M);
      const Complex z = c + r * e;
      const Complex w = df_(z) / f_(z) * r * e / static_cast<double>(M);
      s1 += (z - c) * w;
    }
    return c + s1 / static_cast<double>(n);
  }

  void solve(const Box& b, int n, double min_width, std::vector<OracleZero>& out) const {
    if (n <= 0) return;
    if (b.width() <= min_width) {
      out.push_back({moment(b.center(), b.width(), n), n});
      return;
    }
    for (double t : {0.5, 0.4731, 0.5269, 0.4413}) {
      const double xm = b.x0 + t * (b.x1 - b.x0), ym = b.y0 + t * (b.y1 - b.y0);
      const Box kids[4] = {{b.x0, xm, b.y0, ym}, {xm, b.x1, b.y0, ym}, {b.x0, xm, ym, b.y1}, {xm, b.x1, ym, b.y1}};
      int counts[4];
      bool ok = true;
      int total = 0;
      for (int k = 0; k < 4 && ok; ++k) {
        auto c = count(kids[k]);
        if (!c || *c < 0) ok = false;
        else total += counts[k] = *c;
      }
      if (!ok || total != n) continue;
      for (int k = 0; k < 4; ++k) solve(kids[k], counts[k], min_width, out);
      return;
    }
    // No clean split: report the cluster at this resolution.
    out.push_back({moment(b.center(), b.width(), n), n});
  }
};

}  // namespace oracle
