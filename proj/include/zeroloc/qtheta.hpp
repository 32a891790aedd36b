#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zeroloc/error.hpp"
#include "zeroloc/model.hpp"
#include "zeroloc/roots.hpp"
#include "zeroloc/series.hpp"
#include "zeroloc/verdict.hpp"

namespace zeroloc {

/// Parameters of F(z;q) = sum q^{k(k-1)/2} z^k / k!, truncated at degree N.
struct QSpec {
  Complex q{1.0, 0.0};
  std::size_t N = 80;
};

namespace detail {

inline void require_q(Complex q) {
  if (!is_finite(q)) raise(ErrorKind::NonfiniteValue, "q is not finite");
  const double m = std::abs(q);
  if (!(m > 0.0) || m > 1.0 + 1e-15) raise(ErrorKind::SchemaError, "q must satisfy 0 < |q| <= 1");
}

/// Coefficients that have decayed into the subnormal range are set to zero,
/// together with everything after them.
inline void flush_tail(std::vector<Complex>& c) {
  bool dead = false;
  for (auto& x : c) {
    if (dead || std::abs(x) < DBL_MIN) {
      x = Complex{};
      dead = true;
    }
  }
}

inline Complex eval_even(const SeriesFunction& s, Complex z) {
  const Complex w = z * z;
  Complex acc{};
  for (std::size_t k = (s.size() - 1) / 2 * 2 + 2; k >= 2;) {
    k -= 2;
    acc = acc * w + s[k];
  }
  return acc;
}

inline Complex eval_odd(const SeriesFunction& s, Complex z) {
  const Complex w = z * z;
  Complex acc{};
  for (std::size_t k = s.size() / 2 * 2 + 1; k >= 1;) {
    acc = acc * w + s[k];
    if (k < 2) break;
    k -= 2;
  }
  return acc * z;
}

}  // namespace detail

/// Taylor coefficients q^{k(k-1)/2}/k!, k = 0..N, accumulated as
/// c_k = c_{k-1} q^{k-1} / k.
inline SeriesFunction qexp_series(Complex q, std::size_t N) {
  detail::require_q(q);
  std::vector<Complex> c(N + 1);
  c[0] = 1.0;
  Complex qpow{1.0, 0.0};
  for (std::size_t k = 1; k <= N; ++k) {
    if (k > 1) qpow *= q;
    c[k] = c[k - 1] * qpow / static_cast<double>(k);
  }
  detail::flush_tail(c);
  return SeriesFunction(std::move(c), Provenance::QExponential);
}

inline SeriesFunction qexp_series(const QSpec& spec) { return qexp_series(spec.q, spec.N); }

/// P_N(z;q) = sum binom(N,n) q^{n(n-1)/2} z^n.
inline SeriesFunction qexp_polynomial(std::size_t N, Complex q) {
  if (N < 1) raise(ErrorKind::BadOrder, "N must be at least 1");
  if (!is_finite(q)) raise(ErrorKind::NonfiniteValue, "q is not finite");
  std::vector<Complex> c(N + 1);
  double binom = 1.0;
  Complex qpow{1.0, 0.0}, qtri{1.0, 0.0};
  c[0] = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    binom = binom * static_cast<double>(N - n + 1) / static_cast<double>(n);
    if (n > 1) qpow *= q;
    qtri *= qpow;
    c[n] = std::round(binom) * qtri;
  }
  return SeriesFunction(std::move(c), Provenance::QPolynomial);
}

struct OdeResidual {
  double max_residual = 0.0;
  double trust_radius = 0.0;
  bool within_trust = true;  ///< every sample inside half the trust radius
};

/// max |S'(z) - S(qz)| over the samples, both sides from the truncated series.
inline OdeResidual series_ode_residual(const SeriesFunction& s, Complex q, const std::vector<Complex>& samples) {
  OdeResidual out;
  out.trust_radius = s.trust_radius();
  std::vector<Complex> shifted(s.coeffs());
  Complex qk{1.0, 0.0};
  for (auto& c : shifted) {
    c *= qk;
    qk *= q;
  }
  const SeriesFunction sub(std::move(shifted), Provenance::User);
  for (const auto& z : samples) {
    out.max_residual = std::max(out.max_residual, std::abs(s.derivative(z) - sub(z)));
    if (!s.trust().contains(z, 0.5)) out.within_trust = false;
  }
  return out;
}

inline OdeResidual ode_residual(const QSpec& spec, const std::vector<Complex>& samples) {
  return series_ode_residual(qexp_series(spec), spec.q, samples);
}

/// chi_e(z) = Phi_e(sqrt z) and chi_o(z) = Phi_o(sqrt z)/sqrt z for Phi = F(.;rho):
/// coefficients rho^{n(2n-1)}/(2n)! and rho^{n(2n+1)}/(2n+1)!.
inline std::pair<SeriesFunction, SeriesFunction> chi_parts(double rho, std::size_t N) {
  if (!(rho > 0.0) || rho > 1.0) raise(ErrorKind::SchemaError, "rho must lie in (0, 1]");
  std::vector<Complex> e(N + 1), o(N + 1);
  e[0] = 1.0;
  o[0] = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    const double dn = static_cast<double>(n);
    e[n] = e[n - 1] * std::pow(rho, 4.0 * dn - 3.0) / ((2.0 * dn) * (2.0 * dn - 1.0));
    o[n] = o[n - 1] * std::pow(rho, 4.0 * dn - 1.0) / ((2.0 * dn + 1.0) * (2.0 * dn));
  }
  detail::flush_tail(e);
  detail::flush_tail(o);
  return {SeriesFunction(std::move(e), Provenance::QExponential),
          SeriesFunction(std::move(o), Provenance::QExponential)};
}

namespace detail {

/// First m trusted zeros of a series, which must all be real within tol.
inline std::vector<double> real_zeros(const SeriesFunction& s, std::size_t m, const char* what, double tol = 1e-8) {
  const ZeroList zl = find_roots(s);
  if (zl.entries.size() < m)
    raise(ErrorKind::TrustRadiusExceeded,
          std::string(what) + ": only " + std::to_string(zl.entries.size()) + " trusted zeros, need " +
              std::to_string(m));
  std::vector<double> out;
  for (std::size_t k = 0; k < m; ++k) {
    const Complex z = zl.entries[k].location;
    if (std::abs(z.imag()) > tol * std::abs(z))
      raise(ErrorKind::PropertyViolation, std::string(what) + ": zero " + std::to_string(k + 1) + " is not real");
    out.push_back(z.real());
  }
  return out;
}

}  // namespace detail

/// Zeros -beta of chi_e and -alpha of chi_o together with the chain
///   beta_1 < rho^-2 beta_1 < alpha_1 < rho^-2 alpha_1 < beta_2 < ...
/// For rho = 1 the chain collapses to plain interlacing beta_1 < alpha_1 < beta_2 < ...
struct InterlacingChain {
  std::vector<double> betas;
  std::vector<double> alphas;
  double rho = 0.0;
  std::vector<double> chain;  ///< the values in the order they must increase
  double min_relative_gap = 0.0;
};

inline InterlacingChain interlacing_check(double rho, std::size_t N = 60, std::size_t m = 5) {
  auto [ce, co] = chi_parts(rho, N);
  InterlacingChain ch;
  ch.rho = rho;
  for (double x : detail::real_zeros(ce, m, "chi_e")) ch.betas.push_back(-x);
  for (double x : detail::real_zeros(co, m, "chi_o")) ch.alphas.push_back(-x);
  const double s = 1.0 / (rho * rho);
  for (std::size_t k = 0; k < m; ++k) {
    ch.chain.push_back(ch.betas[k]);
    if (rho < 1.0) ch.chain.push_back(s * ch.betas[k]);
    ch.chain.push_back(ch.alphas[k]);
    if (rho < 1.0) ch.chain.push_back(s * ch.alphas[k]);
  }
  if (ch.chain.front() <= 0.0) raise(ErrorKind::ChainViolation, "beta_1 is not positive");
  ch.min_relative_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < ch.chain.size(); ++k) {
    const double gap = (ch.chain[k + 1] - ch.chain[k]) / ch.chain[k + 1];
    if (!(gap > 0.0))
      raise(ErrorKind::ChainViolation, "chain inequality " + std::to_string(k + 1) + " fails");
    ch.min_relative_gap = std::min(ch.min_relative_gap, gap);
  }
  return ch;
}

/// Zeros of F(z;-rho): real, simple, alternating in sign starting negative,
/// and |lambda_k| > |lambda_{k-1}| / rho.
struct NegativeQReport {
  double rho = 0.0;
  std::vector<double> zeros;
  std::vector<double> ratios;       ///< |lambda_k| / |lambda_{k-1}|
  double min_ratio_margin = 0.0;    ///< min over k of ratio * rho - 1
  double max_imag_relative = 0.0;
};

inline NegativeQReport negative_q_check(double rho, std::size_t N = 100, std::size_t m = 8) {
  if (!(rho > 0.0) || rho > 1.0) raise(ErrorKind::SchemaError, "rho must lie in (0, 1]");
  const SeriesFunction s = qexp_series(Complex{-rho, 0.0}, N);
  const ZeroList zl = find_roots(s);
  NegativeQReport rep;
  rep.rho = rho;
  if (zl.entries.size() < m)
    raise(ErrorKind::TrustRadiusExceeded, "only " + std::to_string(zl.entries.size()) + " trusted zeros");
  for (std::size_t k = 0; k < m; ++k) {
    const auto& e = zl.entries[k];
    const double rel = std::abs(e.location.imag()) / std::abs(e.location);
    rep.max_imag_relative = std::max(rep.max_imag_relative, rel);
    if (rel >= 1e-8) raise(ErrorKind::PropertyViolation, "zero " + std::to_string(k) + " is not real");
    if (e.multiplicity != 1) raise(ErrorKind::PropertyViolation, "zero " + std::to_string(k) + " is not simple");
    rep.zeros.push_back(e.location.real());
  }
  rep.min_ratio_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) {
    const bool want_negative = k % 2 == 0;
    if ((rep.zeros[k] < 0) != want_negative)
      raise(ErrorKind::PropertyViolation, "sign does not alternate at zero " + std::to_string(k));
    if (k == 0) continue;
    const double ratio = std::abs(rep.zeros[k]) / std::abs(rep.zeros[k - 1]);
    rep.ratios.push_back(ratio);
    rep.min_ratio_margin = std::min(rep.min_ratio_margin, ratio * rho - 1.0);
    if (!(ratio * rho > 1.0)) raise(ErrorKind::PropertyViolation, "ratio bound fails at zero " + std::to_string(k));
  }
  return rep;
}

/// For q = -rho the zeros of F are the solutions of
/// R(x) = Phi_e(ix) / (i Phi_o(ix)) = 1, R real on the real line with a pole at 0.
struct SelfInterlacingReport {
  double max_imag_relative = 0.0;  ///< |Im R| / |R| over the samples
  bool pole_at_origin = false;
  bool sign_flips = true;          ///< R - 1 changes sign across every zero
  bool one_per_interval = true;    ///< at most one zero between consecutive zeros/poles of R
  std::vector<double> zeros;
};

inline Complex self_interlacing_value(const SeriesFunction& phi, double x) {
  const Complex ix{0.0, x};
  return detail::eval_even(phi, ix) / (Complex{0.0, 1.0} * detail::eval_odd(phi, ix));
}

inline SelfInterlacingReport self_interlacing_ratio(double rho, std::size_t N, const std::vector<double>& samples,
                                                    std::size_t m = 8) {
  const SeriesFunction phi = qexp_series(Complex{rho, 0.0}, N);
  SelfInterlacingReport rep;
  for (double x : samples) {
    if (x == 0.0) continue;
    const Complex r = self_interlacing_value(phi, x);
    rep.max_imag_relative = std::max(rep.max_imag_relative, std::abs(r.imag()) / std::max(std::abs(r), 1e-300));
  }
  rep.pole_at_origin = detail::eval_odd(phi, Complex{}) == Complex{} && detail::eval_even(phi, Complex{}) != Complex{};

  const auto neg = negative_q_check(rho, N, m);
  rep.zeros = neg.zeros;
  for (double lam : rep.zeros) {
    const double d = 1e-6 * std::abs(lam);
    const double lo = self_interlacing_value(phi, lam - d).real() - 1.0;
    const double hi = self_interlacing_value(phi, lam + d).real() - 1.0;
    if (!(lo * hi < 0.0)) rep.sign_flips = false;
  }
  // Zeros of R at x = +-sqrt(beta), poles at 0 and +-sqrt(alpha).
  auto [ce, co] = chi_parts(rho, N);
  std::vector<double> marks{0.0};
  for (const auto& e : find_roots(ce).entries)
    if (e.location.real() < 0) marks.insert(marks.end(), {std::sqrt(-e.location.real()), -std::sqrt(-e.location.real())});
  for (const auto& e : find_roots(co).entries)
    if (e.location.real() < 0) marks.insert(marks.end(), {std::sqrt(-e.location.real()), -std::sqrt(-e.location.real())});
  std::sort(marks.begin(), marks.end());
  for (std::size_t k = 0; k + 1 < marks.size(); ++k) {
    const auto in = std::count_if(rep.zeros.begin(), rep.zeros.end(),
                                  [&](double x) { return x > marks[k] && x < marks[k + 1]; });
    if (in > 1) rep.one_per_interval = false;
  }
  return rep;
}

/// mu with mu^n = -1 and mu^2 a primitive n-th root of unity, with
/// nu = 1 / sum_{k=1}^n (-mu)^{-k^2}.
struct RootOfUnityDecomposition {
  int n = 1;
  Complex mu{-1.0, 0.0};
  Complex nu{1.0, 0.0};
  Complex nu_tilde{1.0, 0.0};  ///< mu^{m^2} nu for n = 2m, equal to nu for odd n
  double modulus_error = 0.0;  ///< | |nu| - 1/sqrt n |
  double power_law_error = 0.0;  ///< |nu^-4 - n^2| (odd n) or |nu^4 + n^-2| (even n)
};

inline bool mu_admissible(int n, Complex mu) {
  if (n < 1) return false;
  if (std::abs(std::pow(mu, n) + 1.0) >= 1e-12) return false;
  const Complex mu2 = mu * mu;
  Complex p{1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    p *= mu2;
    if (std::abs(p - 1.0) < 1e-9) return false;
  }
  return true;
}

/// Every admissible mu = exp(i pi (2p+1)/n), sorted by principal argument.
inline std::vector<Complex> admissible_mus(int n) {
  std::vector<std::pair<double, Complex>> out;
  for (int p = 0; p < n; ++p) {
    if (std::gcd(2 * p + 1, n) != 1) continue;
    const Complex mu = std::polar(1.0, std::numbers::pi * (2.0 * p + 1.0) / n);
    out.emplace_back(std::arg(mu), mu);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Complex> mus;
  for (const auto& [a, m] : out) mus.push_back(m);
  return mus;
}

namespace detail {

/// (-mu)^{-k^2} through the angle, reduced before exponentiation.
inline Complex neg_mu_power(Complex mu, long long e) {
  const double theta = std::arg(-mu);
  return std::polar(1.0, std::remainder(theta * static_cast<double>(e), 2.0 * std::numbers::pi));
}

inline Complex mu_power(Complex mu, long long e) {
  return std::polar(1.0, std::remainder(std::arg(mu) * static_cast<double>(e), 2.0 * std::numbers::pi));
}

}  // namespace detail

inline RootOfUnityDecomposition gauss_nu(int n, Complex mu) {
  if (!mu_admissible(n, mu)) raise(ErrorKind::NonPrimitiveMu, "mu^n != -1 or mu^2 is not a primitive root");
  Complex sum{};
  for (long long k = 1; k <= n; ++k) sum += detail::neg_mu_power(mu, -k * k);
  if (std::abs(sum) < 1e-12) raise(ErrorKind::ZeroSum, "the Gauss sum vanished");
  RootOfUnityDecomposition d;
  d.n = n;
  d.mu = mu;
  d.nu = 1.0 / sum;
  const double dn = n;
  d.modulus_error = std::abs(std::abs(d.nu) - 1.0 / std::sqrt(dn));
  if (n % 2 == 1) {
    d.nu_tilde = d.nu;
    d.power_law_error = std::abs(1.0 / std::pow(d.nu, 4) - dn * dn);
  } else {
    const long long m = n / 2;
    d.nu_tilde = detail::mu_power(mu, m * m) * d.nu;
    d.power_law_error = std::abs(std::pow(d.nu, 4) + 1.0 / (dn * dn));
  }
  if (d.modulus_error >= 1e-10) raise(ErrorKind::PropertyViolation, "|nu| differs from 1/sqrt(n)");
  return d;
}

/// Residuals of the representations of F(z; rho mu^2) through Phi = F(.;rho).
struct RepresentationResidual {
  double general = 0.0;  ///< F - nu sum (-mu)^{-k^2} Phi(-mu^{2k-1} z)
  std::optional<double> two_term_minus;  ///< n = 2: F(z;-rho) - (Phi_e(iz) - i Phi_o(iz))
  std::optional<double> two_term_plus;   ///< n = 2: F(z;-rho) - (Phi_e(iz) + i Phi_o(iz))
  std::optional<double> four_term;       ///< n = 4: F - (Phi_e(mu z) + mu Phi_o(conj(mu) z))
};

inline RepresentationResidual representation_residual(int n, Complex mu, double rho,
                                                      const std::vector<Complex>& samples, std::size_t N = 80) {
  const auto d = gauss_nu(n, mu);
  const Complex q = rho * mu * mu;
  const SeriesFunction F = qexp_series(q, N);
  const SeriesFunction phi = qexp_series(Complex{rho, 0.0}, N);
  const double radius = std::min(F.trust_radius(), phi.trust_radius());
  RepresentationResidual out;
  const Complex i{0.0, 1.0};
  for (const auto& z : samples) {
    if (std::abs(z) > 0.5 * radius) raise(ErrorKind::TrustRadiusExceeded, "sample outside half the trust radius");
    const Complex lhs = F(z);
    Complex rhs{};
    for (long long k = 1; k <= n; ++k)
      rhs += detail::neg_mu_power(mu, -k * k) * phi(-detail::mu_power(mu, 2 * k - 1) * z);
    rhs *= d.nu;
    out.general = std::max(out.general, std::abs(lhs - rhs));
    if (n == 2) {
      const Complex e = detail::eval_even(phi, i * z), o = detail::eval_odd(phi, i * z);
      out.two_term_minus = std::max(out.two_term_minus.value_or(0.0), std::abs(lhs - (e - i * o)));
      out.two_term_plus = std::max(out.two_term_plus.value_or(0.0), std::abs(lhs - (e + i * o)));
    }
    if (n == 4) {
      const Complex v = detail::eval_even(phi, mu * z) + mu * detail::eval_odd(phi, std::conj(mu) * z);
      out.four_term = std::max(out.four_term.value_or(0.0), std::abs(lhs - v));
    }
  }
  return out;
}

/// For n = 8l: F_e = 2 nu~ sum_{k=1}^{2l} mu^{-4k^2} Phi_e(mu^{4k-1} z) and
/// F_o = 2 nu~ sum_{k=1}^{2l} mu^{-(2k-1)^2} Phi_o(mu^{4k-3} z), compared with
/// the even and odd parts of the series of F(z;q).
struct EvenOddDecompositionResidual {
  double even = 0.0;
  double odd = 0.0;
};

inline EvenOddDecompositionResidual decomposition_residual(int l, Complex mu, double rho,
                                                           const std::vector<Complex>& samples, std::size_t N = 80) {
  const int n = 8 * l;
  const auto d = gauss_nu(n, mu);
  const SeriesFunction F = qexp_series(rho * mu * mu, N);
  const SeriesFunction phi = qexp_series(Complex{rho, 0.0}, N);
  EvenOddDecompositionResidual out;
  for (const auto& z : samples) {
    Complex fe{}, fo{};
    for (long long k = 1; k <= 2 * l; ++k) {
      fe += detail::mu_power(mu, -4 * k * k) * detail::eval_even(phi, detail::mu_power(mu, 4 * k - 1) * z);
      fo += detail::mu_power(mu, -(2 * k - 1) * (2 * k - 1)) * detail::eval_odd(phi, detail::mu_power(mu, 4 * k - 3) * z);
    }
    fe *= 2.0 * d.nu_tilde;
    fo *= 2.0 * d.nu_tilde;
    out.even = std::max(out.even, std::abs(detail::eval_even(F, z) - fe));
    out.odd = std::max(out.odd, std::abs(detail::eval_odd(F, z) - fo));
  }
  return out;
}

/// The two sign variants Phi_e(iz) -+ i Phi_o(iz) as series, for the ODE test
/// with q = -rho. The minus variant coincides with F(z;-rho).
inline SeriesFunction two_term_variant(double rho, std::size_t N, bool minus) {
  const SeriesFunction phi = qexp_series(Complex{rho, 0.0}, N);
  std::vector<Complex> c(phi.size());
  const Complex i{0.0, 1.0};
  Complex ik{1.0, 0.0};
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = k % 2 == 0 ? phi[k] * ik : (minus ? -1.0 : 1.0) * i * phi[k] * ik;
    ik *= i;
  }
  return SeriesFunction(std::move(c), Provenance::QExponential);
}

/// G(z) = alpha sum i^{k(k-1)/2} f_k z^k.
inline SeriesFunction i_power_transform(const std::vector<double>& f, Complex alpha) {
  if (alpha == Complex{}) raise(ErrorKind::ZeroLeadingCoefficient, "alpha must be nonzero");
  static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Complex> c(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) c[k] = alpha * ipow[(k * (k - 1) / 2) % 4] * f[k];
  return SeriesFunction(std::move(c), Provenance::User);
}

/// z -> w z on the series: coefficients c_k w^k.
inline SeriesFunction rotate_series(const SeriesFunction& s, Complex w) {
  std::vector<Complex> c(s.coeffs());
  Complex p{1.0, 0.0};
  for (auto& x : c) {
    x *= p;
    p *= w;
  }
  return SeriesFunction(std::move(c), s.provenance());
}

/// F~(z) = F(conj(mu) z; mu^2 rho) = chi_e(z^2) + conj(mu) z chi_o(-z^2), mu^4 = -1.
inline SeriesFunction rotated_qexp(double rho, Complex mu, std::size_t N) {
  if (std::abs(std::pow(mu, 4) + 1.0) >= 1e-12) raise(ErrorKind::NonPrimitiveMu, "mu^4 must equal -1");
  return rotate_series(qexp_series(rho * mu * mu, N), std::conj(mu));
}

/// Measurements behind the simplicity and distinct-moduli conjectures for
/// the first m trusted zeros.
struct ConjectureReport {
  Complex q;
  std::size_t N = 0;
  bool q_squared_real = false;
  std::vector<Zero> zeros;
  std::size_t requested = 0;
  bool all_simple = true;
  double min_pair_distance = std::numeric_limits<double>::infinity();  ///< relative to max(1,|z|)
  double min_modulus_ratio_minus_one = std::numeric_limits<double>::infinity();
  double separation_factor = std::numeric_limits<double>::infinity();  ///< min |z_k|/|z_{k+1}|^-1 ... see below
  double trust_radius = 0.0;
  std::optional<DistributionReport> distribution;  ///< case-2 verdict for q^2 < 0 (rotated function)
  std::optional<bool> alternating_real;            ///< q < 0
};

inline ConjectureReport conjecture_report(const QSpec& spec, std::size_t m = 8) {
  ConjectureReport rep;
  rep.q = spec.q;
  rep.N = spec.N;
  rep.requested = m;
  const Complex q2 = spec.q * spec.q;
  rep.q_squared_real = std::abs(q2.imag()) <= 1e-14 * std::abs(q2);
  const SeriesFunction s = qexp_series(spec);
  rep.trust_radius = s.trust_radius();
  const ZeroList zl = find_roots(s);
  for (std::size_t k = 0; k < std::min(m, zl.entries.size()); ++k) rep.zeros.push_back(zl.entries[k]);
  for (std::size_t a = 0; a < rep.zeros.size(); ++a) {
    if (rep.zeros[a].multiplicity != 1) rep.all_simple = false;
    for (std::size_t b = a + 1; b < rep.zeros.size(); ++b) {
      const Complex za = rep.zeros[a].location, zb = rep.zeros[b].location;
      rep.min_pair_distance =
          std::min(rep.min_pair_distance, std::abs(za - zb) / std::max({1.0, std::abs(za), std::abs(zb)}));
    }
  }
  if (rep.min_pair_distance <= 1e-6) rep.all_simple = false;
  for (std::size_t k = 0; k + 1 < rep.zeros.size(); ++k) {
    const double ratio = std::abs(rep.zeros[k + 1].location) / std::abs(rep.zeros[k].location);
    rep.min_modulus_ratio_minus_one = std::min(rep.min_modulus_ratio_minus_one, ratio - 1.0);
    rep.separation_factor = std::min(rep.separation_factor, 1.0 / ratio);
  }
  if (rep.zeros.size() < 2) rep.separation_factor = 0.0;
  if (rep.q_squared_real && q2.real() < 0 && !rep.zeros.empty()) {
    // q = rho mu^2 with mu^4 = -1; test the rotated function.
    const double rho = std::abs(spec.q);
    const Complex mu = std::sqrt(spec.q / rho);
    const SeriesFunction rot = rotate_series(s, std::conj(mu));
    const ZeroList rz = find_roots(rot);
    ZeroList head = rz;
    head.entries.resize(std::min(m, rz.entries.size()));
    const auto sc = series_constant_c(rot);
    if (!head.entries.empty()) rep.distribution = verify_distribution(head, sc.c, sc.j);
  }
  if (rep.q_squared_real && spec.q.real() < 0 && std::abs(spec.q.imag()) <= 1e-14) {
    bool ok = true;
    for (std::size_t k = 0; k < rep.zeros.size(); ++k) {
      const Complex z = rep.zeros[k].location;
      if (std::abs(z.imag()) > 1e-8 * std::abs(z) || (z.real() < 0) != (k % 2 == 0)) ok = false;
    }
    rep.alternating_real = ok;
  }
  return rep;
}

}  // namespace zeroloc
