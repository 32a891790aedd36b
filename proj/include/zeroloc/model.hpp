#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "zeroloc/error.hpp"
#include "zeroloc/series.hpp"

namespace zeroloc {

/// F(z) = f(z^2) + z g(z^2) with
///   f(w) = f0 prod (1 + w/b_mu),   g(w) = g0 w^j prod (1 - w/a_nu).
/// Zeros of f sit at -b_mu, zeros of g (away from the origin) at +a_nu.
class StructuredFunction {
 public:
  StructuredFunction() = default;

  Complex f0() const noexcept { return f0_; }
  Complex g0() const noexcept { return g0_; }
  unsigned j() const noexcept { return j_; }
  const std::vector<double>& b() const noexcept { return b_; }
  const std::vector<double>& a() const noexcept { return a_; }

  /// Both f and z^j g constant: F(z) = f0 + z g0.
  bool is_linear() const noexcept { return b_.empty() && a_.empty() && j_ == 0; }

  /// Polynomial degree of F.
  std::size_t degree() const noexcept {
    std::size_t even = 2 * b_.size();
    std::size_t odd = 2 * (a_.size() + j_) + 1;
    return even > odd ? even : odd;
  }

 private:
  friend StructuredFunction build_structured(Complex, std::vector<double>, Complex, unsigned,
                                             std::vector<double>);
  Complex f0_{1.0, 0.0};
  std::vector<double> b_;
  Complex g0_{1.0, 0.0};
  unsigned j_ = 0;
  std::vector<double> a_;
};

inline StructuredFunction build_structured(Complex f0, std::vector<double> b, Complex g0, unsigned j,
                                           std::vector<double> a) {
  if (!is_finite(f0) || !is_finite(g0)) raise(ErrorKind::NonfiniteValue, "f0 and g0 must be finite");
  if (f0 == Complex{}) raise(ErrorKind::ZeroLeadingCoefficient, "f0 must be nonzero");
  if (g0 == Complex{}) raise(ErrorKind::ZeroLeadingCoefficient, "g0 must be nonzero");
  for (double x : b)
    if (!(x > 0.0) || !std::isfinite(x)) raise(ErrorKind::NonpositiveFactor, "every b must be a positive real");
  for (double x : a)
    if (!(x > 0.0) || !std::isfinite(x)) raise(ErrorKind::NonpositiveFactor, "every a must be a positive real");
  if (b.empty() && a.empty() && j > 0)
    raise(ErrorKind::DegenerateConstantPair, "f and g both constant requires j = 0");
  StructuredFunction s;
  s.f0_ = f0;
  s.b_ = std::move(b);
  s.g0_ = g0;
  s.j_ = j;
  s.a_ = std::move(a);
  return s;
}

/// c = -(g0/|g0|)(|f0|/f0); always of unit modulus.
inline Complex constant_c(const StructuredFunction& s) {
  return -(s.g0() / std::abs(s.g0())) * (std::abs(s.f0()) / s.f0());
}

namespace detail {

/// Value and derivative of prod (1 + s_k w), assembled by prefix/suffix
/// products so the derivative stays exact at zeros of individual factors.
inline std::pair<Complex, Complex> linear_product(const std::vector<double>& scale, Complex w) {
  const std::size_t n = scale.size();
  std::vector<Complex> prefix(n + 1, Complex{1.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * (1.0 + scale[k] * w);
  Complex deriv{};
  Complex suffix{1.0, 0.0};
  for (std::size_t k = n; k-- > 0;) {
    deriv += scale[k] * prefix[k] * suffix;
    suffix *= 1.0 + scale[k] * w;
  }
  return {prefix[n], deriv};
}

inline std::vector<double> f_scales(const StructuredFunction& s) {
  std::vector<double> out;
  out.reserve(s.b().size());
  for (double b : s.b()) out.push_back(1.0 / b);
  return out;
}

inline std::vector<double> g_scales(const StructuredFunction& s) {
  std::vector<double> out;
  out.reserve(s.a().size());
  for (double a : s.a()) out.push_back(-1.0 / a);
  return out;
}

inline Complex checked(Complex v, const char* what) {
  if (!is_finite(v)) raise(ErrorKind::Overflow, what);
  return v;
}

inline void require_finite(Complex z) {
  if (!is_finite(z)) raise(ErrorKind::NonfiniteValue, "argument is not finite");
}

}  // namespace detail

inline Complex eval_f(const StructuredFunction& s, Complex w) {
  Complex p = s.f0();
  for (double b : s.b()) p *= 1.0 + w / b;
  return p;
}

inline Complex eval_g(const StructuredFunction& s, Complex w) {
  Complex p = s.g0() * std::pow(w, static_cast<int>(s.j()));
  for (double a : s.a()) p *= 1.0 - w / a;
  return p;
}

inline Complex eval_F(const StructuredFunction& s, Complex z) {
  detail::require_finite(z);
  const Complex w = z * z;
  return detail::checked(eval_f(s, w) + z * eval_g(s, w), "F overflowed");
}

/// F'(z) = 2z f'(z^2) + g(z^2) + 2z^2 g'(z^2).
inline Complex eval_dF(const StructuredFunction& s, Complex z) {
  detail::require_finite(z);
  const Complex w = z * z;
  auto [pf, dpf] = detail::linear_product(detail::f_scales(s), w);
  auto [pg, dpg] = detail::linear_product(detail::g_scales(s), w);
  const int j = static_cast<int>(s.j());
  const Complex wj = std::pow(w, j);
  const Complex df = s.f0() * dpf;
  const Complex g = s.g0() * wj * pg;
  Complex dg = s.g0() * wj * dpg;
  if (j > 0) dg += s.g0() * static_cast<double>(j) * std::pow(w, j - 1) * pg;
  return detail::checked(2.0 * z * df + g + 2.0 * w * dg, "F' overflowed");
}

/// R(z) = |f0| prod(1 + z^2/b) / (z^{2j+1} |g0| prod(1 - z^2/a)).
/// F(z) = 0 exactly when R(z) = c.
inline Complex eval_R(const StructuredFunction& s, Complex z) {
  detail::require_finite(z);
  if (z == Complex{}) raise(ErrorKind::OriginInput, "R has a pole at the origin");
  const Complex w = z * z;
  Complex den = std::abs(s.g0()) * std::pow(z, static_cast<int>(2 * s.j() + 1));
  for (double a : s.a()) {
    if (std::abs(w - a) < 1e-13 * (1.0 + a)) raise(ErrorKind::PoleAtInput, "z^2 coincides with a pole of R");
    den *= 1.0 - w / a;
  }
  Complex num = std::abs(s.f0());
  for (double b : s.b()) num *= 1.0 + w / b;
  return detail::checked(num / den, "R overflowed");
}

/// R'/R = sum 2z/(b+z^2) + sum 2z/(a-z^2) - (2j+1)/z.
inline Complex eval_log_deriv_R(const StructuredFunction& s, Complex z) {
  detail::require_finite(z);
  if (z == Complex{}) raise(ErrorKind::SingularInput, "origin is a pole of R");
  const Complex w = z * z;
  Complex acc = -static_cast<double>(2 * s.j() + 1) / z;
  for (double b : s.b()) {
    if (std::abs(w + b) < 1e-13 * (1.0 + b)) raise(ErrorKind::SingularInput, "z^2 coincides with a zero of f");
    acc += 2.0 * z / (b + w);
  }
  for (double a : s.a()) {
    if (std::abs(w - a) < 1e-13 * (1.0 + a)) raise(ErrorKind::SingularInput, "z^2 coincides with a zero of g");
    acc += 2.0 * z / (a - w);
  }
  return acc;
}

namespace detail {

/// Coefficients (ascending) of lead * prod (1 + s_k w).
inline std::vector<Complex> expand_product(Complex lead, const std::vector<double>& scale) {
  std::vector<Complex> p{lead};
  for (double sk : scale) {
    p.push_back(Complex{});
    for (std::size_t k = p.size() - 1; k > 0; --k) p[k] += sk * p[k - 1];
  }
  return p;
}

}  // namespace detail

/// Exact polynomial coefficients of F.
inline SeriesFunction expand_to_series(const StructuredFunction& s) {
  const auto f = detail::expand_product(s.f0(), detail::f_scales(s));
  const auto g = detail::expand_product(s.g0(), detail::g_scales(s));
  std::vector<Complex> c(s.degree() + 1, Complex{});
  for (std::size_t k = 0; k < f.size(); ++k) c[2 * k] += f[k];
  for (std::size_t k = 0; k < g.size(); ++k) c[2 * (k + s.j()) + 1] += g[k];
  return SeriesFunction(std::move(c), Provenance::StructuredExpansion);
}

/// F(z) = E(z^2) + z O(z^2). Both halves inherit the provenance of the input.
inline std::pair<SeriesFunction, SeriesFunction> split_even_odd(const SeriesFunction& series) {
  std::vector<Complex> even;
  std::vector<Complex> odd;
  const auto& c = series.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) (k % 2 == 0 ? even : odd).push_back(c[k]);
  if (odd.empty()) odd.push_back(Complex{});
  return {SeriesFunction(std::move(even), series.provenance()),
          SeriesFunction(std::move(odd), series.provenance())};
}

/// c and j read off a power series F(z) = alpha f_0 + ... + beta z^{2j+1} + ...:
/// alpha is the constant term, beta the first nonzero odd coefficient, and
/// c = -(beta/|beta|)(|alpha|/alpha).
struct SeriesConstant {
  Complex c;
  unsigned j = 0;
};

inline SeriesConstant series_constant_c(const SeriesFunction& series) {
  const Complex alpha = series[0];
  if (alpha == Complex{}) raise(ErrorKind::ZeroLeadingCoefficient, "constant term must be nonzero");
  for (std::size_t k = 1; k < series.size(); k += 2) {
    const Complex beta = series[k];
    if (beta != Complex{})
      return {-(beta / std::abs(beta)) * (std::abs(alpha) / alpha), static_cast<unsigned>((k - 1) / 2)};
  }
  raise(ErrorKind::ZeroLeadingCoefficient, "series has no nonzero odd coefficient");
}

}  // namespace zeroloc
