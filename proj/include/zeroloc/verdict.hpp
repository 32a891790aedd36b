#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zeroloc/error.hpp"
#include "zeroloc/roots.hpp"
#include "zeroloc/series.hpp"

namespace zeroloc {

/// The four distributions of the localization theorem:
/// 1: Im c^2 > 0, 2: Im c^2 < 0, 3: c real, 4: c purely imaginary.
inline int classify_case(Complex c, double tol = 1e-10) {
  if (!is_finite(c)) raise(ErrorKind::NonfiniteValue, "c is not finite");
  const bool real_axis = std::abs(c.imag()) < tol;
  const bool imag_axis = std::abs(c.real()) < tol;
  if (real_axis && imag_axis) raise(ErrorKind::AmbiguousCase, "c lies on both axes");
  if (real_axis) return 3;
  if (imag_axis) return 4;
  return (c * c).imag() > 0 ? 1 : 2;
}

/// Open quadrant 1..4 (counterclockwise), or 0 on an axis within `tol` relative.
inline int quadrant(Complex z, double tol = 1e-8) {
  const double scale = std::abs(z);
  if (scale == 0.0) return 0;
  if (std::abs(z.real()) <= tol * scale || std::abs(z.imag()) <= tol * scale) return 0;
  if (z.real() > 0) return z.imag() > 0 ? 1 : 4;
  return z.imag() > 0 ? 2 : 3;
}

/// Quadrant of z1 listed for cases 1 and 2. For even j: c in Q1, Q2, Q3, Q4
/// gives z1 in Q4, Q3, Q2, Q1; odd j uses -c in place of c.
inline std::optional<int> listed_first_quadrant(Complex c, unsigned j) {
  static constexpr int even_table[5] = {0, 4, 3, 2, 1};
  const Complex key = j % 2 == 0 ? c : -c;
  const int q = quadrant(key, 1e-10);
  if (q == 0) return std::nullopt;
  return even_table[q];
}

struct ClauseResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct DistributionReport {
  int case_id = 0;
  std::vector<ClauseResult> clauses;
  std::vector<ClauseResult> first_zero;
  /// Zeros in the order used for the checks (multiplicities expanded,
  /// equal-modulus groups in canonical order).
  std::vector<Complex> ordered;
  bool overall = true;
};

namespace detail {

inline std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << '(' << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  return os.str();
}

inline int sign_tol(double x, double scale, double tol) {
  if (std::abs(x) <= tol * scale) return 0;
  return x > 0 ? 1 : -1;
}

}  // namespace detail

/// Relative distance from an axis below which a polished zero is treated as
/// lying on it in cases 1 and 2, where the theorem excludes axis zeros.
/// Polished zeros are accurate to about this level, so a genuine near-axis
/// zero is still placed in its quadrant.
inline constexpr double kAxisResolution = 1e-12;

/// The "Moreover" conditions on the first zero for the case selected by c.
struct FirstZeroPredicate {
  int case_id = 0;
  Complex c;
  unsigned j = 0;
  double tol = 1e-8;

  std::vector<ClauseResult> evaluate(Complex z1) const {
    const int sj = j % 2 == 0 ? 1 : -1;
    const double m = std::abs(z1);
    const double axis_tol = case_id <= 2 ? std::min(tol, kAxisResolution) : tol;
    // Signs are taken one factor at a time; c is off the relevant axis by
    // the case classification.
    const int sx = detail::sign_tol(z1.real(), m, axis_tol), sy = detail::sign_tol(z1.imag(), m, axis_tol);
    const int sc_re = (c.real() > 0) - (c.real() < 0), sc_im = (c.imag() > 0) - (c.imag() < 0);
    std::vector<ClauseResult> out;
    auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok, fmt_z(z1)}); };
    switch (case_id) {
      case 1:
        add("first: (-1)^j Re c Re z1 > 0", sj * sc_re * sx > 0);
        add("first: Re z1 Im z1 < 0", sx * sy < 0);
        break;
      case 2:
        add("first: (-1)^j Im c Im z1 < 0", sj * sc_im * sy < 0);
        add("first: Re z1 Im z1 > 0", sx * sy > 0);
        break;
      case 3:
        add("first: (-1)^j c Re z1 > 0", sj * sc_re * sx > 0);
        add("first: Re z1 Im z1 <= 0", sx * sy <= 0);
        break;
      case 4:
        add("first: (-1)^j Im c Im z1 < 0", sj * sc_im * sy < 0);
        add("first: Re z1 = 0", sx == 0);
        break;
      default:
        break;
    }
    if (case_id == 1 || case_id == 2) {
      const auto q = listed_first_quadrant(c, j);
      add("first: listed quadrant", q && quadrant(z1, axis_tol) == *q);
    }
    return out;
  }

  bool operator()(Complex z1) const {
    const auto r = evaluate(z1);
    return std::all_of(r.begin(), r.end(), [](const ClauseResult& x) { return x.pass; });
  }

 private:
  static std::string fmt_z(Complex z) { return "z1=" + detail::fmt(z); }
};

inline FirstZeroPredicate expected_first_zero(Complex c, unsigned j, double tol = 1e-8) {
  return {classify_case(c), c, j, tol};
}

namespace detail {

/// Expand multiplicities and order each equal-modulus group so members with
/// Re z Im z <= 0 come first; this matches the theorem's labelling of pairs.
inline std::vector<Complex> canonical_order(const ZeroList& zeros, double tol) {
  std::vector<Complex> z;
  for (const auto& e : zeros.entries)
    for (int k = 0; k < e.multiplicity; ++k) z.push_back(e.location);
  std::stable_sort(z.begin(), z.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  std::size_t start = 0;
  while (start < z.size()) {
    std::size_t end = start + 1;
    while (end < z.size() && std::abs(z[end]) - std::abs(z[end - 1]) <= tol * std::max(1.0, std::abs(z[end])))
      ++end;
    std::stable_partition(z.begin() + static_cast<std::ptrdiff_t>(start), z.begin() + static_cast<std::ptrdiff_t>(end),
                          [&](Complex w) { return w.real() * w.imag() <= tol * std::norm(w); });
    start = end;
  }
  return z;
}

}  // namespace detail

/// Check every clause of the case selected by c against a sorted zero list.
inline DistributionReport verify_distribution(const ZeroList& zeros, Complex c, unsigned j, double tol = 1e-8) {
  if (zeros.entries.empty()) raise(ErrorKind::EmptyZeroList, "no zeros to verify");
  DistributionReport rep;
  rep.case_id = classify_case(c);
  const auto z = detail::canonical_order(zeros, tol);
  rep.ordered = z;
  const std::size_t n = z.size();
  auto mod = [&](std::size_t k) { return std::abs(z[k]); };
  auto equal_mod = [&](std::size_t a, std::size_t b) {
    return std::abs(mod(a) - mod(b)) <= tol * std::max(1.0, std::max(mod(a), mod(b)));
  };
  auto close = [&](Complex a, Complex b) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); };
  auto on_real = [&](Complex w) { return std::abs(w.imag()) <= tol * std::abs(w); };
  auto on_imag = [&](Complex w) { return std::abs(w.real()) <= tol * std::abs(w); };
  auto idx = [](std::size_t k) { return std::to_string(k + 1); };

  auto clause = [&](std::string name) -> ClauseResult& {
    rep.clauses.push_back({std::move(name), true, ""});
    return rep.clauses.back();
  };
  auto fail = [](ClauseResult& c, std::string w) {
    if (c.pass) {
      c.pass = false;
      c.witness = std::move(w);
    }
  };

  {
    auto& cl = clause("nonzero");
    for (std::size_t k = 0; k < n; ++k)
      if (z[k] == Complex{}) fail(cl, "z" + idx(k) + " = 0");
  }
  {
    auto& cl = clause("multiplicity <= 2");
    for (const auto& e : zeros.entries)
      if (e.multiplicity > 2) fail(cl, detail::fmt(e.location) + " has multiplicity " + std::to_string(e.multiplicity));
  }

  const int cs = rep.case_id;
  if (cs == 1 || cs == 2) {
    const double axis_tol = std::min(tol, kAxisResolution);
    auto& simple = clause("all zeros simple");
    for (const auto& e : zeros.entries)
      if (e.multiplicity != 1) fail(simple, detail::fmt(e.location) + " has multiplicity " + std::to_string(e.multiplicity));
    auto& strict = clause("strictly increasing moduli");
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (mod(k + 1) - mod(k) <= tol * std::max(1.0, mod(k + 1)))
        fail(strict, "|z" + idx(k) + "| = |z" + idx(k + 1) + "| = " + std::to_string(mod(k)));
    auto& off_axis = clause("Im z^2 != 0");
    for (std::size_t k = 0; k < n; ++k)
      if (quadrant(z[k], axis_tol) == 0) fail(off_axis, "z" + idx(k) + " = " + detail::fmt(z[k]) + " on an axis");
    auto& cycle = clause(cs == 1 ? "quadrants cycle counterclockwise" : "quadrants cycle clockwise");
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const int q0 = quadrant(z[k], axis_tol), q1 = quadrant(z[k + 1], axis_tol);
      if (q0 == 0 || q1 == 0) continue;
      const int want = cs == 1 ? q0 % 4 + 1 : (q0 == 1 ? 4 : q0 - 1);
      if (q1 != want)
        fail(cycle, "z" + idx(k) + " in Q" + std::to_string(q0) + ", z" + idx(k + 1) + " in Q" + std::to_string(q1));
    }
  } else if (cs == 3) {
    auto& pattern = clause("moduli |z1| <= |z2| < |z3| <= |z4| < ...");
    for (std::size_t k = 0; k + 1 < n; ++k) {
      // 0-based k odd: boundary between pairs, must be strict.
      if (k % 2 == 1 && equal_mod(k, k + 1))
        fail(pattern, "|z" + idx(k) + "| = |z" + idx(k + 1) + "|");
      if (mod(k + 1) < mod(k) && !equal_mod(k, k + 1)) fail(pattern, "z" + idx(k + 1) + " out of order");
    }
    auto& no_imag = clause("no purely imaginary zeros");
    for (std::size_t k = 0; k < n; ++k)
      if (on_imag(z[k])) fail(no_imag, "z" + idx(k) + " = " + detail::fmt(z[k]));
    auto& mult = clause("only real zeros may be double");
    for (const auto& e : zeros.entries)
      if (e.multiplicity == 2 && !on_real(e.location)) fail(mult, detail::fmt(e.location) + " is a non-real double zero");
    auto& pairs = clause("pairs (z_{2k-1}, z_{2k}) conjugate or real on one side");
    for (std::size_t k = 0; k + 1 < n; k += 2) {
      if (equal_mod(k, k + 1)) {
        if (!close(z[k], std::conj(z[k + 1])))
          fail(pairs, "z" + idx(k) + " = " + detail::fmt(z[k]) + " is not conj z" + idx(k + 1));
      } else if (!(on_real(z[k]) && on_real(z[k + 1]) && z[k].real() * z[k + 1].real() > 0)) {
        fail(pairs, "z" + idx(k) + ", z" + idx(k + 1) + " not real with equal argument");
      }
    }
    auto& alt = clause("sign Re z_{2k} = -sign Re z_{2k+1}");
    for (std::size_t k = 1; k + 1 < n; k += 2) {
      const int s0 = detail::sign_tol(z[k].real(), mod(k), tol);
      const int s1 = detail::sign_tol(z[k + 1].real(), mod(k + 1), tol);
      if (s0 != -s1) fail(alt, "z" + idx(k) + ", z" + idx(k + 1) + " on the same side");
    }
  } else {
    auto& pattern = clause("moduli |z1| < |z2| <= |z3| < |z4| <= ...");
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (k % 2 == 0 && equal_mod(k, k + 1))
        fail(pattern, "|z" + idx(k) + "| = |z" + idx(k + 1) + "|");
      if (mod(k + 1) < mod(k) && !equal_mod(k, k + 1)) fail(pattern, "z" + idx(k + 1) + " out of order");
    }
    auto& no_real = clause("no real zeros");
    for (std::size_t k = 0; k < n; ++k)
      if (on_real(z[k])) fail(no_real, "z" + idx(k) + " = " + detail::fmt(z[k]));
    auto& mult = clause("only imaginary zeros may be double");
    for (const auto& e : zeros.entries)
      if (e.multiplicity == 2 && !on_imag(e.location))
        fail(mult, detail::fmt(e.location) + " is a non-imaginary double zero");
    auto& pairs = clause("pairs (z_{2k}, z_{2k+1}) mirrored or imaginary on one side");
    for (std::size_t k = 1; k + 1 < n; k += 2) {
      if (equal_mod(k, k + 1)) {
        if (!close(z[k], -std::conj(z[k + 1])))
          fail(pairs, "z" + idx(k) + " = " + detail::fmt(z[k]) + " is not -conj z" + idx(k + 1));
      } else if (!(on_imag(z[k]) && on_imag(z[k + 1]) && z[k].imag() * z[k + 1].imag() > 0)) {
        fail(pairs, "z" + idx(k) + ", z" + idx(k + 1) + " not imaginary with equal argument");
      }
    }
    auto& alt = clause("sign Im z_{2k-1} = -sign Im z_{2k}");
    for (std::size_t k = 0; k + 1 < n; k += 2) {
      const int s0 = detail::sign_tol(z[k].imag(), mod(k), tol);
      const int s1 = detail::sign_tol(z[k + 1].imag(), mod(k + 1), tol);
      if (s0 != -s1) fail(alt, "z" + idx(k) + ", z" + idx(k + 1) + " on the same side");
    }
  }

  rep.first_zero = FirstZeroPredicate{cs, c, j, tol}.evaluate(z.front());
  rep.overall = std::all_of(rep.clauses.begin(), rep.clauses.end(), [](const ClauseResult& x) { return x.pass; }) &&
                std::all_of(rep.first_zero.begin(), rep.first_zero.end(), [](const ClauseResult& x) { return x.pass; });
  return rep;
}

}  // namespace zeroloc
