#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zeroloc/cli/job.hpp"
#include "zeroloc/cli/json_io.hpp"
#include "zeroloc/cli/plot.hpp"
#include "zeroloc/grommer.hpp"
#include "zeroloc/locus.hpp"
#include "zeroloc/qtheta.hpp"
#include "zeroloc/roots.hpp"
#include "zeroloc/verdict.hpp"

namespace zeroloc::cli {

enum ExitCode { kPass = 0, kVerdictFail = 1, kInputError = 2, kNumericalError = 3 };

struct Outcome {
  Json report;
  std::optional<std::string> csv;
  std::optional<std::string> svg;
  int exit_code = kPass;
};

inline int exit_code_for(ErrorKind k) {
  if (k == ErrorKind::ChainViolation || k == ErrorKind::PropertyViolation) return kVerdictFail;
  return error_category(k) == ErrorCategory::Input ? kInputError : kNumericalError;
}

inline Json error_json(const Error& e, const std::string& context) {
  return {{"kind", std::string(to_string(e.kind()))},
          {"category", error_category(e.kind()) == ErrorCategory::Input ? "input" : "numerical"},
          {"message", e.what()},
          {"context", context}};
}

inline Json zeros_json(const std::vector<Zero>& zs) {
  Json out = Json::array();
  for (const auto& z : zs)
    out.push_back({{"re", number(z.location.real())},
                   {"im", number(z.location.imag())},
                   {"multiplicity", z.multiplicity},
                   {"modulus", number(std::abs(z.location))},
                   {"quadrant", quadrant(z.location)}});
  return out;
}

inline Json clauses_json(const std::vector<ClauseResult>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return out;
}

inline Json distribution_json(const DistributionReport& r, Complex c, unsigned j) {
  return {{"case", r.case_id},
          {"c", complex_to(c)},
          {"j", j},
          {"clauses", clauses_json(r.clauses)},
          {"first_zero", clauses_json(r.first_zero)},
          {"overall", r.overall}};
}

inline Json minors_json(const MinorVerdict& v, std::size_t order) {
  Json minors = Json::array();
  for (const auto& m : v.minors)
    minors.push_back({{"value", number(m.value)}, {"sign", m.sign}, {"float_value", number(m.float_value)},
                      {"condition", number(m.condition)}});
  Json out{{"order", order}, {"verdict", to_string(v.verdict)}, {"minors", minors}, {"notes", v.notes},
           {"pass", v.pass()}};
  out["fail_index"] = v.fail_index ? Json(*v.fail_index) : Json();
  return out;
}

namespace detail {

inline std::vector<Zero> head(const std::vector<Zero>& z, std::size_t m) {
  return {z.begin(), z.begin() + static_cast<std::ptrdiff_t>(std::min(m, z.size()))};
}

inline std::vector<Complex> head_points(const std::vector<Complex>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

inline bool is_negative_real(Complex q) { return q.real() < 0 && q.imag() == 0.0; }

/// q^2 real and negative: q = rho mu^2 with mu^4 = -1.
inline std::optional<Complex> quarter_turn_mu(Complex q) {
  const Complex q2 = q * q;
  if (std::abs(q2.imag()) > 1e-14 * std::abs(q2) || q2.real() >= 0) return std::nullopt;
  return std::sqrt(q / std::abs(q));
}

/// Real coefficients of a polynomial known to be real up to rounding.
inline std::vector<double> real_parts(const std::vector<Complex>& c, Complex scale, const char* what) {
  std::vector<double> out;
  for (const auto& x : c) {
    const Complex y = x / scale;
    if (std::abs(y.imag()) > 1e-12 * std::max(1.0, std::abs(y)))
      raise(ErrorKind::SchemaError, std::string(what) + " does not have real coefficients after normalization");
    out.push_back(y.real());
  }
  return out;
}

inline std::vector<Complex> sample_disk(std::mt19937_64& rng, std::size_t n, double radius) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<Complex> out;
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(std::polar(radius * std::sqrt(U(rng)), 2 * std::numbers::pi * U(rng)));
  return out;
}

}  // namespace detail

class Runner {
 public:
  explicit Runner(JobSpec job) : job_(std::move(job)) {}

  Outcome run(bool want_csv, bool want_svg) {
    out_.report = {{"schema_version", kSchemaVersion},
                   {"tool_version", kToolVersion},
                   {"kind", to_string(job_.kind)},
                   {"input", job_.payload},
                   {"tolerances",
                    {{"verdict", job_.options.tol},
                     {"residual", RootOptions{}.residual_tol},
                     {"cluster", RootOptions{}.cluster_factor},
                     {"trust_safety", RootOptions{}.trust_safety},
                     {"sort", RootOptions{}.sort_tolerance}}},
                   {"options",
                    {{"truncation", job_.options.truncation},
                     {"max_zeros", job_.options.max_zeros},
                     {"seed", job_.options.seed}}},
                   {"analyses", Json::object()}};
    want_csv_ = want_csv;
    want_svg_ = want_svg;
    const char* order[] = {"roots", "verdict", "locus", "grommer", "sokal", "identities"};
    bool needs_zeros = want_svg;
    for (const char* a : {"roots", "verdict", "locus"}) needs_zeros = needs_zeros || job_.wants(a);
    if (needs_zeros && !guarded("roots", [&] { compute_zeros(); })) return finish();
    for (const char* name : order) {
      if (!job_.wants(name)) continue;
      const std::string a = name;
      bool ok = true;
      if (a == "roots") ok = guarded(a, [&] { analysis("roots") = roots_json(); });
      else if (a == "verdict") ok = guarded(a, [&] { run_verdict(); });
      else if (a == "locus") ok = guarded(a, [&] { run_locus(); });
      else if (a == "grommer") ok = guarded(a, [&] { run_grommer(); });
      else if (a == "sokal") ok = guarded(a, [&] { run_sokal(); });
      else if (a == "identities") ok = guarded(a, [&] { run_identities(); });
      if (!ok) return finish();
    }
    if (want_svg_ && !out_.svg) guarded("svg", [&] { plot_generic(); });
    return finish();
  }

 private:
  JobSpec job_;
  Outcome out_;
  bool want_csv_ = false, want_svg_ = false;
  bool any_fail_ = false;
  std::optional<Error> error_;
  std::string error_context_;

  std::optional<SeriesFunction> series_;
  ZeroList zeros_;
  Complex c_{};
  unsigned j_ = 0;
  bool c_known_ = false;

  Json& analysis(const char* name) { return out_.report["analyses"][name]; }

  void fail() { any_fail_ = true; }

  template <class F>
  bool guarded(const std::string& ctx, F&& f) {
    try {
      f();
      return true;
    } catch (const Error& e) {
      if (exit_code_for(e.kind()) == kVerdictFail) {
        out_.report["analyses"][ctx]["violation"] = error_json(e, ctx);
        out_.report["analyses"][ctx]["pass"] = false;
        fail();
        return true;
      }
      error_ = e;
      error_context_ = ctx;
      return false;
    }
  }

  Outcome finish() {
    Json status;
    if (error_) {
      out_.exit_code = exit_code_for(error_->kind());
      status["error"] = error_json(*error_, error_context_);
    } else {
      out_.exit_code = any_fail_ ? kVerdictFail : kPass;
    }
    status["exit_code"] = out_.exit_code;
    status["passed"] = out_.exit_code == kPass;
    out_.report["status"] = status;
    return std::move(out_);
  }

  const SeriesFunction& series() {
    if (!series_) {
      // q with q^2 < 0 and no explicit rotation: analyze the rotated function.
      if (job_.kind == JobKind::QExp && !job_.rotate_mu) {
        if (auto mu = detail::quarter_turn_mu(job_.q)) job_.rotate_mu = mu;
      }
      series_ = job_series(job_);
    }
    return *series_;
  }

  void compute_zeros() {
    if (job_.kind == JobKind::Structured) {
      zeros_ = find_zeros(*job_.structured);
      c_ = constant_c(*job_.structured);
      j_ = job_.structured->j();
      c_known_ = true;
      return;
    }
    const auto& s = series();
    zeros_ = find_roots(s);
    if (job_.kind == JobKind::QExp) {
      zeros_.entries = detail::head(zeros_.entries, job_.options.max_zeros);
    }
    if (s[0] != Complex{}) {
      try {
        const auto sc = series_constant_c(s);
        c_ = sc.c;
        j_ = sc.j;
        c_known_ = true;
      } catch (const Error&) {
      }
    }
  }

  Json roots_json() {
    Json r{{"zeros", zeros_json(zeros_.entries)},
           {"unconfirmed", zeros_json(zeros_.unconfirmed)},
           {"trust_radius", number(zeros_.trust_radius)},
           {"worst_residual", number(zeros_.worst_residual)},
           {"sweeps", zeros_.sweeps},
           {"count_with_multiplicity", zeros_.count_with_multiplicity()}};
    if (job_.rotate_mu) {
      r["rotated_by"] = complex_to(std::conj(*job_.rotate_mu));
      r["note"] = "zeros w of F(conj(mu) w; q); the zeros of F(z; q) are conj(mu) w (unrotated_zeros)";
      std::vector<Zero> back(zeros_.entries);
      for (auto& z : back) z.location *= std::conj(*job_.rotate_mu);
      r["unrotated_zeros"] = zeros_json(back);
    }
    return r;
  }

  void run_verdict() {
    Json& v = analysis("verdict");
    if (job_.kind == JobKind::QExp && !job_.rotate_mu) {
      if (detail::is_negative_real(job_.q)) {
        v["note"] = "q < 0: F is not of the structured form; verdict is the negative-q zero pattern";
        v["pass"] = false;
        const auto rep = negative_q_check(std::abs(job_.q), job_.options.truncation, job_.options.max_zeros);
        v["zeros"] = rep.zeros;
        v["min_ratio_margin"] = number(rep.min_ratio_margin);
        v["pass"] = true;
      } else {
        v["note"] = "no structured-form verdict applies for this q; see the sokal analysis";
        v["applicable"] = false;
      }
      return;
    }
    if (!c_known_) raise(ErrorKind::ZeroLeadingCoefficient, "c is undefined for this function");
    const auto rep = verify_distribution(zeros_, c_, j_, job_.options.tol);
    v = distribution_json(rep, c_, j_);
    if (job_.kind == JobKind::Series || job_.kind == JobKind::QPoly)
      v["hypotheses"] = "not checked; run the grommer analysis for the zero-location hypotheses";
    if (job_.rotate_mu && !zeros_.entries.empty()) {
      const Complex literal = std::conj(*job_.rotate_mu);
      const auto pred = expected_first_zero(literal, j_, job_.options.tol);
      v["literal_conj_mu_first_zero"] = {{"c", complex_to(literal)},
                                          {"clauses", clauses_json(pred.evaluate(zeros_.entries.front().location))}};
    }
    if (!rep.overall) fail();
  }

  std::pair<double, double> locus_window() const {
    double lo = job_.options.r_min, hi = job_.options.r_max;
    if (!zeros_.entries.empty()) {
      if (!(lo > 0)) lo = 0.5 * std::abs(zeros_.entries.front().location);
      if (!(hi > 0)) hi = 1.5 * std::abs(zeros_.entries.back().location);
    }
    if (!(lo > 0)) lo = 0.1;
    if (!(hi > lo)) hi = 10 * lo;
    return {lo, hi};
  }

  void run_locus() {
    if (job_.kind != JobKind::Structured) raise(ErrorKind::SchemaError, "locus requires a structured function");
    const auto& s = *job_.structured;
    const auto [lo, hi] = locus_window();
    Json& l = analysis("locus");
    l["r_min"] = lo;
    l["r_max"] = hi;
    const auto samples = trace_branch(s, lo, hi, job_.options.locus_samples);
    const auto mono = check_arg_monotone(samples);
    l["samples"] = samples.size();
    l["arg_span"] = samples.back().arg_unwrapped - samples.front().arg_unwrapped;
    l["monotone"] = mono.ok();
    l["decreases"] = mono.decreases;
    const auto cps = locate_c_points(s, lo, hi, job_.options.locus_samples);
    Json pts = Json::array();
    double worst = 0.0;
    for (const auto& p : cps) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& z : zeros_.entries) best = std::min(best, std::abs(z.location - p.location));
      worst = std::max(worst, best);
      pts.push_back({{"z", complex_to(p.location)},
                     {"quadrant", p.quadrant},
                     {"target", static_cast<int>(p.target)},
                     {"branch_r", p.branch_r},
                     {"distance_to_solver", number(best)}});
    }
    l["c_points"] = pts;
    l["max_distance_to_solver"] = number(cps.empty() ? 0.0 : worst);
    const auto fc = first_crossing(s);
    l["first_crossing"] = {{"r", fc.r}, {"l", fc.l}, {"arg", fc.arg}, {"on_axis", fc.on_axis},
                           {"arg_matches", fc.arg_matches}};
    std::size_t in_window = 0;
    for (const auto& z : zeros_.entries)
      if (std::abs(z.location) >= lo && std::abs(z.location) <= hi) in_window += static_cast<std::size_t>(z.multiplicity);
    const bool pass = mono.ok() && cps.size() == in_window && worst < 1e-7;
    l["pass"] = pass;
    if (!pass) fail();
    if (want_csv_) out_.csv = locus_csv(samples);
    if (want_svg_) {
      std::vector<Complex> z;
      for (const auto& e : zeros_.entries) z.push_back(e.location);
      out_.svg = locus_svg(r_function(s), c_, z);
    }
  }

  void plot_generic() {
    if (!c_known_) raise(ErrorKind::ZeroLeadingCoefficient, "c is undefined for this function");
    std::vector<Complex> z;
    for (const auto& e : zeros_.entries) z.push_back(e.location);
    out_.svg = job_.kind == JobKind::Structured ? locus_svg(r_function(*job_.structured), c_, z)
                                                : locus_svg(r_function(series(), c_), c_, z);
  }

  void run_grommer() {
    Json& g = analysis("grommer");
    std::vector<double> even, odd;
    std::size_t order = job_.options.grommer_order;
    if (job_.kind == JobKind::Structured) {
      // f(w)/f0 and g(-w)/(g0 (-w)^j): both have only negative zeros.
      const auto& s = *job_.structured;
      std::vector<double> inv_b, inv_a;
      for (double b : s.b()) inv_b.push_back(1.0 / b);
      for (double a : s.a()) inv_a.push_back(1.0 / a);
      for (const auto& x : zeroloc::detail::expand_product(Complex{1.0, 0.0}, inv_b)) even.push_back(x.real());
      for (const auto& x : zeroloc::detail::expand_product(Complex{1.0, 0.0}, inv_a)) odd.push_back(x.real());
      g["parts"] = "f(w)/f0 and g(-w)/(g0 (-w)^j)";
    } else if (job_.kind == JobKind::QExp) {
      const double rho = std::abs(job_.q);
      auto [ce, co] = chi_parts(rho, job_.options.truncation);
      even = detail::real_parts(ce.coeffs(), 1.0, "chi_e");
      odd = detail::real_parts(co.coeffs(), 1.0, "chi_o");
      if (order == 0) order = 12;
      g["parts"] = "chi_e(w) and chi_o(w) for rho = |q|";
    } else {
      auto [e, o] = split_even_odd(series());
      even = detail::real_parts(e.coeffs(), e[0], "even part");
      std::size_t j = 0;
      while (j < o.size() && o[j] == Complex{}) ++j;
      if (j == o.size()) raise(ErrorKind::ZeroLeadingCoefficient, "odd part vanishes");
      std::vector<Complex> flipped;
      for (std::size_t k = j; k < o.size(); ++k) flipped.push_back(o[k] * ((k - j) % 2 ? -1.0 : 1.0));
      odd = detail::real_parts(flipped, flipped[0], "odd part");
      g["parts"] = "E(w)/E(0) and O(-w)/(beta (-w)^j)";
    }
    const std::size_t oe = order ? order : default_grommer_order(even);
    const std::size_t oo = order ? order : default_grommer_order(odd);
    const auto ve = negativity_verdict(even, oe);
    const auto vo = negativity_verdict(odd, oo);
    g["even"] = minors_json(ve, oe);
    g["odd"] = minors_json(vo, oo);
    g["pass"] = ve.pass() && vo.pass();
    if (!(ve.pass() && vo.pass())) fail();
  }

  void run_sokal() {
    if (job_.kind != JobKind::QExp) raise(ErrorKind::SchemaError, "the sokal analysis requires a qexp job");
    Json& s = analysis("sokal");
    const Complex q = job_.q;
    const double rho = std::abs(q);
    const std::size_t N = job_.options.truncation, m = job_.options.max_zeros;
    const Complex q2 = q * q;
    const bool q2_real = std::abs(q2.imag()) <= 1e-14 * std::abs(q2);
    std::string regime = "exploratory (q^2 not real)";
    if (q2_real) regime = q2.real() < 0 ? "q^2 < 0" : (q.real() < 0 ? "q < 0" : "q > 0");
    s["regime"] = regime;
    s["proven_regime"] = q2_real;

    const auto cr = conjecture_report({q, N}, m);
    Json c{{"zeros", zeros_json(cr.zeros)},
           {"requested", cr.requested},
           {"complete", cr.zeros.size() >= m},
           {"all_simple", cr.all_simple},
           {"min_pair_distance", number(cr.min_pair_distance)},
           {"min_modulus_ratio_minus_one", number(cr.min_modulus_ratio_minus_one)},
           {"distinct_moduli", cr.zeros.size() < 2 || cr.min_modulus_ratio_minus_one > 1e-6},
           {"separation_factor", number(cr.separation_factor)},
           {"abs_q", rho},
           {"trust_radius", number(cr.trust_radius)}};
    if (cr.zeros.empty()) c["note"] = "no zeros in the trusted disk";
    if (cr.distribution) {
      const Complex mu = *detail::quarter_turn_mu(q);
      const auto sc = series_constant_c(rotate_series(qexp_series(q, N), std::conj(mu)));
      c["rotated_distribution"] = distribution_json(*cr.distribution, sc.c, sc.j);
    }
    if (cr.alternating_real) c["alternating_real"] = *cr.alternating_real;
    s["conjecture"] = c;
    bool pass = !q2_real || (cr.all_simple && (cr.zeros.size() < 2 || cr.min_modulus_ratio_minus_one > 1e-6));
    if (cr.distribution && !cr.distribution->overall) pass = false;
    if (cr.alternating_real && !*cr.alternating_real) pass = false;

    // ODE check inside half the trust radius.
    {
      const SeriesFunction f = qexp_series(q, N);
      const double r = std::min(2.0, 0.4 * f.trust_radius());
      std::vector<Complex> pts;
      for (int k = 0; k < 8; ++k) pts.push_back(std::polar(r, 2 * std::numbers::pi * (k + 0.25) / 8));
      const auto o = series_ode_residual(f, q, pts);
      s["ode"] = {{"radius", r}, {"max_residual", number(o.max_residual)}, {"within_trust", o.within_trust}};
      if (!(o.max_residual < 1e-10)) pass = false;
    }

    if (detail::is_negative_real(q)) {
      Json nq;
      try {
        const auto rep = negative_q_check(rho, N, m);
        nq = {{"zeros", rep.zeros}, {"ratios", rep.ratios}, {"min_ratio_margin", number(rep.min_ratio_margin)},
              {"max_imag_relative", number(rep.max_imag_relative)}, {"pass", true}};
      } catch (const Error& e) {
        if (exit_code_for(e.kind()) != kVerdictFail) throw;
        nq = {{"pass", false}, {"violation", error_json(e, "negative_q")}};
        pass = false;
      }
      s["negative_q"] = nq;
      std::vector<double> xs;
      for (int k = 1; k <= 40; ++k) xs.push_back(0.1 * k);
      const auto si = self_interlacing_ratio(rho, N, xs, std::min<std::size_t>(m, 6));
      const bool si_ok = si.max_imag_relative < 1e-10 && si.pole_at_origin && si.sign_flips && si.one_per_interval;
      s["self_interlacing"] = {{"max_imag_relative", number(si.max_imag_relative)},
                               {"pole_at_origin", si.pole_at_origin},
                               {"sign_flips", si.sign_flips},
                               {"one_per_interval", si.one_per_interval},
                               {"pass", si_ok}};
      if (!si_ok) pass = false;
      // Two-term representation: only the minus sign satisfies F' = F(qz).
      const auto minus = two_term_variant(rho, N, true), plus = two_term_variant(rho, N, false);
      std::vector<Complex> pts{{1.0, 0.0}, {0.5, 0.5}, {-0.7, 0.2}};
      const double rm = series_ode_residual(minus, q, pts).max_residual;
      const double rp = series_ode_residual(plus, q, pts).max_residual;
      s["two_term_sign"] = {{"minus_residual", number(rm)}, {"plus_residual", number(rp)},
                            {"canonical", "Phi_e(iz) - i Phi_o(iz)"}};
    }
    if (rho < 1.0 && q2_real) {
      Json ch;
      try {
        const auto chain = interlacing_check(rho, N, 5);
        ch = {{"betas", chain.betas}, {"alphas", chain.alphas}, {"min_relative_gap", chain.min_relative_gap},
              {"inequalities", chain.chain.size() - 1}, {"pass", true}};
      } catch (const Error& e) {
        if (exit_code_for(e.kind()) != kVerdictFail) throw;
        ch = {{"pass", false}, {"violation", error_json(e, "interlacing")}};
        pass = false;
      }
      s["interlacing"] = ch;
    }
    s["pass"] = pass;
    if (!pass) fail();
  }

  void run_identities() {
    Json& id = analysis("identities");
    const std::size_t N = job_.options.truncation;
    double rho = 0.7;
    if (job_.kind == JobKind::QExp) rho = std::abs(job_.q);
    id["rho"] = rho;
    bool pass = true;

    Json gauss = Json::array();
    double worst_mod = 0, worst_law = 0;
    for (int n = 1; n <= 12; ++n) {
      for (const auto& mu : admissible_mus(n)) {
        const auto d = gauss_nu(n, mu);
        worst_mod = std::max(worst_mod, d.modulus_error);
        worst_law = std::max(worst_law, d.power_law_error);
        gauss.push_back({{"n", n}, {"mu", complex_to(mu)}, {"nu", complex_to(d.nu)},
                         {"nu_tilde", complex_to(d.nu_tilde)}, {"modulus_error", d.modulus_error},
                         {"power_law_error", d.power_law_error}});
      }
    }
    id["gauss"] = {{"entries", gauss}, {"worst_modulus_error", worst_mod}, {"worst_power_law_error", worst_law}};
    if (!(worst_mod < 1e-10 && worst_law < 1e-9)) pass = false;

    std::mt19937_64 rng(job_.options.seed);
    const auto pts = detail::sample_disk(rng, 20, 2.0);
    Json rep = Json::array();
    for (int n : {2, 3, 4}) {
      for (const auto& mu : admissible_mus(n)) {
        const auto r = representation_residual(n, mu, rho, pts, N);
        Json e{{"n", n}, {"mu", complex_to(mu)}, {"general", number(r.general)}};
        if (r.two_term_minus) e["two_term_minus"] = number(*r.two_term_minus);
        if (r.two_term_plus) e["two_term_plus"] = number(*r.two_term_plus);
        if (r.four_term) e["four_term"] = number(*r.four_term);
        if (!(r.general < 1e-9) || (r.four_term && !(*r.four_term < 1e-9)) ||
            (r.two_term_minus && !(*r.two_term_minus < 1e-9)))
          pass = false;
        rep.push_back(e);
      }
    }
    id["representation"] = rep;

    const auto minus = two_term_variant(rho, N, true), plus = two_term_variant(rho, N, false);
    const double rm = series_ode_residual(minus, -rho, pts).max_residual;
    const double rp = series_ode_residual(plus, -rho, pts).max_residual;
    const double gap = std::log10(rp / std::max(rm, 1e-300));
    id["two_term_sign"] = {{"minus_ode_residual", number(rm)}, {"plus_ode_residual", number(rp)},
                           {"orders_of_magnitude", number(gap)}, {"canonical", "Phi_e(iz) - i Phi_o(iz)"}};
    if (!(gap >= 6)) pass = false;

    Json dec = Json::array();
    for (const auto& mu : admissible_mus(8)) {
      const auto d = decomposition_residual(1, mu, rho, detail::head_points(pts, 10), N);
      dec.push_back({{"mu", complex_to(mu)}, {"even", number(d.even)}, {"odd", number(d.odd)}});
      if (!(d.even < 1e-9 && d.odd < 1e-9)) pass = false;
    }
    id["decomposition_n8"] = dec;

    // Phi_e'(z) = Phi_o(rho z) and Phi_o'(z) = Phi_e(rho z).
    const SeriesFunction phi = qexp_series(Complex{rho, 0.0}, N);
    std::vector<Complex> ec(phi.coeffs()), oc(phi.coeffs());
    for (std::size_t k = 0; k < ec.size(); ++k) (k % 2 ? ec[k] : oc[k]) = Complex{};
    const SeriesFunction pe(std::move(ec), Provenance::User), po(std::move(oc), Provenance::User);
    double de = 0, dd = 0;
    for (const auto& z : pts) {
      de = std::max(de, std::abs(pe.derivative(z) - po(rho * z)));
      dd = std::max(dd, std::abs(po.derivative(z) - pe(rho * z)));
    }
    id["parity_derivatives"] = {{"even", number(de)}, {"odd", number(dd)}};
    if (!(de < 1e-11 && dd < 1e-11)) pass = false;

    id["pass"] = pass;
    if (!pass) fail();
  }
};

inline Outcome execute(const JobSpec& job, bool want_csv = false, bool want_svg = false) {
  return Runner(job).run(want_csv, want_svg);
}

}  // namespace zeroloc::cli
