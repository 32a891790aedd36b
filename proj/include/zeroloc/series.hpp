#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "zeroloc/error.hpp"

namespace zeroloc {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Where a coefficient list came from. Only truncations of entire functions
/// (q-exponential) get a finite trust radius; everything else is an exact polynomial.
enum class Provenance { StructuredExpansion, QExponential, QPolynomial, User };

constexpr std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::StructuredExpansion: return "structured-expansion";
    case Provenance::QExponential: return "q-exponential";
    case Provenance::QPolynomial: return "q-polynomial";
    case Provenance::User: return "user";
  }
  return "unknown";
}

constexpr bool is_exact_polynomial(Provenance p) noexcept { return p != Provenance::QExponential; }

/// Disk inside which zeros of a truncation are accepted as zeros of the
/// underlying entire function. `tail_bound` is the last-coefficient proxy |c_N| r^N.
struct TrustDisk {
  double radius = std::numeric_limits<double>::infinity();
  double tail_bound = 0.0;

  bool unbounded() const noexcept { return std::isinf(radius); }
  bool contains(Complex z, double safety = 1.0) const noexcept {
    return unbounded() || std::abs(z) <= safety * radius;
  }
};

namespace detail {

inline std::size_t last_nonzero(std::span<const Complex> c) noexcept {
  std::size_t n = c.size();
  while (n > 0 && c[n - 1] == Complex{}) --n;
  return n == 0 ? 0 : n - 1;
}

// Relative threshold for the last-term proxy and the number of trailing
// indices that must show decreasing term magnitudes.
inline constexpr double kTailRatio = 1e-13;
inline constexpr std::size_t kTailWindow = 10;

}  // namespace detail

/// Largest r with |c_N| r^N < 1e-13 max_k |c_k| r^k and |c_k| r^k nonincreasing
/// over the last ten indices. Found by bisection on log r. Exact polynomials
/// (and degree-0 truncations) get an unbounded disk.
inline TrustDisk trust_radius(std::span<const Complex> coeffs, Provenance provenance) {
  TrustDisk disk;
  bool any = std::any_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c != Complex{}; });
  if (!any || is_exact_polynomial(provenance)) return disk;
  const std::size_t n = detail::last_nonzero(coeffs);
  if (n == 0) return disk;

  std::vector<double> logc(n + 1, -std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k <= n; ++k)
    if (coeffs[k] != Complex{}) logc[k] = std::log(std::abs(coeffs[k]));

  const double log_ratio = std::log(detail::kTailRatio);
  const std::size_t first = n >= detail::kTailWindow ? n - detail::kTailWindow + 1 : 0;

  auto admissible = [&](double t) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= n; ++k) best = std::max(best, logc[k] + static_cast<double>(k) * t);
    if (logc[n] + static_cast<double>(n) * t - best >= log_ratio) return false;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t k = first; k <= n; ++k) {
      if (std::isinf(logc[k])) continue;
      double term = logc[k] + static_cast<double>(k) * t;
      if (term > prev) return false;
      prev = term;
    }
    return true;
  };

  double lo = -60.0;
  double hi = 800.0;
  if (!admissible(lo)) {
    disk.radius = 0.0;
    disk.tail_bound = std::abs(coeffs[n]);
    return disk;
  }
  if (admissible(hi)) return disk;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    (admissible(mid) ? lo : hi) = mid;
  }
  disk.radius = std::exp(lo);
  disk.tail_bound = std::exp(logc[n] + static_cast<double>(n) * lo);
  return disk;
}

/// Truncated power series c_0 + c_1 z + ... + c_N z^N together with its trust disk.
class SeriesFunction {
 public:
  SeriesFunction() : coeffs_{Complex{}} {}

  SeriesFunction(std::vector<Complex> coeffs, Provenance provenance)
      : coeffs_(std::move(coeffs)), provenance_(provenance) {
    if (coeffs_.empty()) coeffs_.push_back(Complex{});
    for (const auto& c : coeffs_)
      if (!is_finite(c)) raise(ErrorKind::NonfiniteValue, "series coefficient is not finite");
    trust_ = zeroloc::trust_radius(coeffs_, provenance_);
  }

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Provenance provenance() const noexcept { return provenance_; }
  const TrustDisk& trust() const noexcept { return trust_; }
  double trust_radius() const noexcept { return trust_.radius; }

  bool is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
  }

  /// Index of the last nonzero coefficient (0 for the zero series).
  std::size_t degree() const noexcept { return detail::last_nonzero(coeffs_); }

  Complex operator()(Complex z) const noexcept {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Complex derivative(Complex z) const noexcept {
    Complex acc{};
    for (std::size_t k = coeffs_.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs_[k];
    return acc;
  }

  /// Sum of |c_k| |z|^k; the natural magnitude against which residuals are measured.
  double magnitude(Complex z) const noexcept {
    const double r = std::abs(z);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
  }

 private:
  std::vector<Complex> coeffs_;
  Provenance provenance_ = Provenance::User;
  TrustDisk trust_;
};

inline TrustDisk trust_radius(const SeriesFunction& series) {
  return trust_radius(series.coeffs(), series.provenance());
}

}  // namespace zeroloc
