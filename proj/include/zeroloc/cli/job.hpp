#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zeroloc/cli/json_io.hpp"
#include "zeroloc/model.hpp"
#include "zeroloc/qtheta.hpp"

namespace zeroloc::cli {

enum class JobKind { Structured, Series, QExp, QPoly };

inline const char* to_string(JobKind k) noexcept {
  switch (k) {
    case JobKind::Structured: return "structured";
    case JobKind::Series: return "series";
    case JobKind::QExp: return "qexp";
    case JobKind::QPoly: return "qpoly";
  }
  return "unknown";
}

inline const std::set<std::string>& known_analyses() {
  static const std::set<std::string> names{"roots", "verdict", "locus", "grommer", "sokal", "identities"};
  return names;
}

struct JobOptions {
  std::size_t truncation = 80;
  std::size_t max_zeros = 8;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  double r_min = 0.0;  ///< locus window; 0 picks one from the zeros
  double r_max = 0.0;
  std::size_t locus_samples = 512;
  std::size_t grommer_order = 0;  ///< 0 picks the default
};

struct JobSpec {
  JobKind kind = JobKind::Structured;
  Json payload;  ///< echoed verbatim in the report
  std::set<std::string> analyses;
  JobOptions options;

  // Validated construction parameters.
  std::optional<StructuredFunction> structured;
  std::vector<Complex> series_coeffs;
  Complex q{1.0, 0.0};
  std::size_t n = 0;  ///< qpoly degree
  std::optional<Complex> rotate_mu;

  bool wants(const std::string& a) const { return analyses.count(a) != 0; }
};

namespace detail {

inline std::vector<double> reals_from(const Json& v, const char* field) {
  if (v.is_null()) return {};
  if (!v.is_array()) raise(ErrorKind::SchemaError, std::string(field) + " must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) raise(ErrorKind::SchemaError, std::string(field) + " entries must be numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

inline const Json& require(const Json& obj, const char* field) {
  if (!obj.contains(field)) raise(ErrorKind::SchemaError, std::string("missing field ") + field);
  return obj.at(field);
}

template <class T>
T unsigned_field(const Json& v, const char* field) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    raise(ErrorKind::SchemaError, std::string(field) + " must be a nonnegative integer");
  return static_cast<T>(v.get<long long>());
}

inline std::set<std::string> default_analyses(JobKind k) {
  switch (k) {
    case JobKind::Structured: return {"roots", "verdict"};
    case JobKind::QExp: return {"roots", "sokal"};
    default: return {"roots", "verdict"};
  }
}

}  // namespace detail

/// Validates a job document. Schema problems raise SchemaError; invalid
/// construction parameters raise the model's own errors (both input errors).
inline JobSpec parse_job(const Json& doc) {
  if (!doc.is_object()) raise(ErrorKind::SchemaError, "job must be a JSON object");
  {
    const auto& v = detail::require(doc, "schema_version");
    if (!(v.is_string() && v.get<std::string>() == kSchemaVersion) && !(v.is_number_integer() && v.get<int>() == 1))
      raise(ErrorKind::SchemaError, "unsupported schema_version");
  }
  const auto& kind = detail::require(doc, "kind");
  if (!kind.is_string()) raise(ErrorKind::SchemaError, "kind must be a string");
  JobSpec job;
  const std::string k = kind.get<std::string>();
  if (k == "structured") job.kind = JobKind::Structured;
  else if (k == "series") job.kind = JobKind::Series;
  else if (k == "qexp") job.kind = JobKind::QExp;
  else if (k == "qpoly") job.kind = JobKind::QPoly;
  else raise(ErrorKind::SchemaError, "unknown kind '" + k + "'");

  job.payload = detail::require(doc, "payload");
  if (!job.payload.is_object()) raise(ErrorKind::SchemaError, "payload must be an object");

  if (doc.contains("options")) {
    const auto& o = doc.at("options");
    if (!o.is_object()) raise(ErrorKind::SchemaError, "options must be an object");
    auto& opt = job.options;
    if (o.contains("truncation")) opt.truncation = detail::unsigned_field<std::size_t>(o["truncation"], "truncation");
    if (o.contains("max_zeros")) opt.max_zeros = detail::unsigned_field<std::size_t>(o["max_zeros"], "max_zeros");
    if (o.contains("seed")) opt.seed = detail::unsigned_field<std::uint64_t>(o["seed"], "seed");
    if (o.contains("locus_samples"))
      opt.locus_samples = detail::unsigned_field<std::size_t>(o["locus_samples"], "locus_samples");
    if (o.contains("grommer_order"))
      opt.grommer_order = detail::unsigned_field<std::size_t>(o["grommer_order"], "grommer_order");
    auto positive = [&](const char* f, double& dst) {
      if (!o.contains(f)) return;
      if (!o[f].is_number() || !(o[f].get<double>() > 0))
        raise(ErrorKind::SchemaError, std::string(f) + " must be a positive number");
      dst = o[f].get<double>();
    };
    positive("tol", opt.tol);
    positive("r_min", opt.r_min);
    positive("r_max", opt.r_max);
    if (opt.r_min > 0 && opt.r_max > 0 && opt.r_min >= opt.r_max)
      raise(ErrorKind::SchemaError, "r_min must be below r_max");
  }

  if (doc.contains("analyses")) {
    const auto& a = doc.at("analyses");
    if (!a.is_array()) raise(ErrorKind::SchemaError, "analyses must be an array of names");
    for (const auto& x : a) {
      if (!x.is_string() || !known_analyses().count(x.get<std::string>()))
        raise(ErrorKind::SchemaError, "unknown analysis " + x.dump());
      job.analyses.insert(x.get<std::string>());
    }
  } else {
    job.analyses = detail::default_analyses(job.kind);
  }

  const Json& p = job.payload;
  switch (job.kind) {
    case JobKind::Structured: {
      const Complex f0 = complex_from(detail::require(p, "f0"), "f0");
      const Complex g0 = complex_from(detail::require(p, "g0"), "g0");
      const unsigned j = p.contains("j") ? detail::unsigned_field<unsigned>(p["j"], "j") : 0u;
      job.structured = build_structured(f0, detail::reals_from(p.value("b", Json()), "b"), g0, j,
                                        detail::reals_from(p.value("a", Json()), "a"));
      break;
    }
    case JobKind::Series: {
      const auto& c = detail::require(p, "coeffs");
      if (!c.is_array() || c.empty()) raise(ErrorKind::SchemaError, "coeffs must be a nonempty array");
      for (const auto& x : c) job.series_coeffs.push_back(complex_from(x, "coeffs"));
      for (const auto& x : job.series_coeffs)
        if (!is_finite(x)) raise(ErrorKind::NonfiniteValue, "coefficient is not finite");
      break;
    }
    case JobKind::QExp: {
      job.q = complex_from(detail::require(p, "q"), "q");
      if (p.contains("N")) job.options.truncation = detail::unsigned_field<std::size_t>(p["N"], "N");
      if (job.options.truncation < 8) raise(ErrorKind::SchemaError, "N must be at least 8");
      const double m = std::abs(job.q);
      if (!(m > 0.0) || m > 1.0 + 1e-15) raise(ErrorKind::SchemaError, "q must satisfy 0 < |q| <= 1");
      if (p.contains("rotate_mu")) job.rotate_mu = complex_from(p["rotate_mu"], "rotate_mu");
      break;
    }
    case JobKind::QPoly: {
      job.q = complex_from(detail::require(p, "q"), "q");
      job.n = detail::unsigned_field<std::size_t>(detail::require(p, "N"), "N");
      if (job.n < 1) raise(ErrorKind::SchemaError, "N must be at least 1");
      if (!is_finite(job.q)) raise(ErrorKind::NonfiniteValue, "q is not finite");
      break;
    }
  }
  return job;
}

/// Power series of the job's function (exact for all kinds but qexp).
inline SeriesFunction job_series(const JobSpec& job) {
  switch (job.kind) {
    case JobKind::Structured: return expand_to_series(*job.structured);
    case JobKind::Series: return SeriesFunction(job.series_coeffs, Provenance::User);
    case JobKind::QExp: {
      SeriesFunction s = qexp_series(job.q, job.options.truncation);
      return job.rotate_mu ? rotate_series(s, std::conj(*job.rotate_mu)) : s;
    }
    case JobKind::QPoly: return qexp_polynomial(job.n, job.q);
  }
  return SeriesFunction({Complex{1.0, 0.0}}, Provenance::User);
}

}  // namespace zeroloc::cli
