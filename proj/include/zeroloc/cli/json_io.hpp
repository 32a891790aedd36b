#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "zeroloc/error.hpp"
#include "zeroloc/series.hpp"

namespace zeroloc::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

#ifdef ZEROLOC_VERSION_STRING
inline constexpr const char* kToolVersion = ZEROLOC_VERSION_STRING;
#else
inline constexpr const char* kToolVersion = "0.1.0";
#endif

/// Reads [re, im] or a bare real number.
inline Complex complex_from(const Json& v, const char* field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  raise(ErrorKind::SchemaError, std::string(field) + " must be a number or an [re, im] pair");
}

/// Non-finite doubles become the strings "inf", "-inf" and "nan".
inline Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline Json complex_to(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

namespace detail {

inline void escape_to(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  out += '"';
}

inline void dump_to(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        escape_to(out, it.key());
        out += ": ";
        dump_to(out, it.value(), indent + 2);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_to(out, j[i], indent + 2);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      return;
    }
    case Json::value_t::string: escape_to(out, j.get<std::string>()); return;
    default: out += j.dump(); return;
  }
}

}  // namespace detail

/// Pretty printer with keys in lexicographic order (nlohmann's default map)
/// and every double written with 17 significant digits.
inline std::string dump(const Json& j) {
  std::string out;
  detail::dump_to(out, j, 0);
  out += '\n';
  return out;
}

}  // namespace zeroloc::cli
