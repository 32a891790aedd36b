#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zeroloc/error.hpp"

namespace zeroloc {

/// Dense square matrix, row-major.
struct Matrix {
  std::size_t n = 0;
  std::vector<double> data;

  Matrix() = default;
  explicit Matrix(std::size_t order) : n(order), data(order * order, 0.0) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows) : n(rows.size()), data() {
    for (const auto& r : rows) {
      if (r.size() != n) raise(ErrorKind::BadOrder, "matrix must be square");
      data.insert(data.end(), r.begin(), r.end());
    }
  }

  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  std::vector<double> row(std::size_t i) const {
    return {data.begin() + static_cast<std::ptrdiff_t>(i * n), data.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)};
  }
};

struct GrommerMatrices {
  Matrix even_matrix;
  Matrix odd_matrix;
  std::size_t order = 0;
  std::vector<double> base_even;
  std::vector<double> base_odd;
};

/// The Hurwitz-type pattern: row 0 is the base sequence, row 1 has k * base[k],
/// and every further pair of rows repeats rows 0 and 1 shifted one column right.
inline Matrix grommer_matrix(const std::vector<double>& base, std::size_t order) {
  if (order < 1) raise(ErrorKind::BadOrder, "order must be at least 1");
  for (double x : base)
    if (!std::isfinite(x)) raise(ErrorKind::NonfiniteValue, "coefficient is not finite");
  auto at = [&](std::size_t k) { return k < base.size() ? base[k] : 0.0; };
  Matrix m(order);
  for (std::size_t r = 0; r < order; ++r) {
    const std::size_t shift = r / 2;
    for (std::size_t col = shift; col < order; ++col) {
      const std::size_t k = col - shift;
      m(r, col) = r % 2 == 0 ? at(k) : static_cast<double>(k) * at(k);
    }
  }
  return m;
}

inline GrommerMatrices build_matrices(std::vector<double> even_coeffs, std::vector<double> odd_coeffs,
                                      std::size_t order) {
  GrommerMatrices g;
  g.order = order;
  g.even_matrix = grommer_matrix(even_coeffs, order);
  g.odd_matrix = grommer_matrix(odd_coeffs, order);
  g.base_even = std::move(even_coeffs);
  g.base_odd = std::move(odd_coeffs);
  return g;
}

/// A leading principal minor. `value` is the exact determinant rounded to
/// double; `sign` is exact. `float_value` and `condition` come from an
/// independent double-precision elimination with full pivoting.
struct Minor {
  double value = 0.0;
  int sign = 0;
  double float_value = 0.0;
  double condition = 1.0;
};

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

/// Scale all entries by one power of two so they become integers; returns
/// the integers and the exponent e with entry = integer * 2^e.
inline std::pair<std::vector<BigInt>, int> to_dyadic_integers(const Matrix& m) {
  int e_min = std::numeric_limits<int>::max();
  for (double x : m.data) {
    if (x == 0.0) continue;
    int e = 0;
    std::frexp(x, &e);
    e_min = std::min(e_min, e - 53);
  }
  if (e_min == std::numeric_limits<int>::max()) e_min = 0;
  std::vector<BigInt> out;
  out.reserve(m.data.size());
  for (double x : m.data) {
    if (x == 0.0) {
      out.emplace_back(0);
      continue;
    }
    int e = 0;
    const double frac = std::frexp(x, &e);
    // frac * 2^53 is an integer of at most 53 bits.
    BigInt v = static_cast<std::int64_t>(std::ldexp(frac, 53));
    const int shift = e - 53 - e_min;
    v <<= shift;
    out.push_back(std::move(v));
  }
  return {std::move(out), e_min};
}

/// Exact determinant of the leading k x k block by fraction-free elimination
/// with row pivoting.
inline BigInt bareiss_det(std::vector<BigInt> a, std::size_t stride, std::size_t k) {
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * stride + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (at(p, p) == 0) {
      std::size_t r = p + 1;
      while (r < k && at(r, p) == 0) ++r;
      if (r == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(at(p, c), at(r, c));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
      at(i, p) = 0;
    }
    prev = at(p, p);
  }
  return sign > 0 ? at(k - 1, k - 1) : BigInt(-at(k - 1, k - 1));
}

inline double big_to_double(const BigInt& v, long long exponent) {
  if (v == 0) return 0.0;
  BigInt mag = v < 0 ? BigInt(-v) : v;
  const long long bits = static_cast<long long>(boost::multiprecision::msb(mag)) + 1;
  long long drop = bits > 64 ? bits - 64 : 0;
  mag >>= static_cast<unsigned>(drop);
  const double d = std::ldexp(static_cast<double>(static_cast<std::uint64_t>(mag)),
                              static_cast<int>(std::clamp<long long>(drop + exponent, -100000, 100000)));
  return v < 0 ? -d : d;
}

struct FloatDet {
  double value;
  double condition;
};

inline FloatDet float_det(const Matrix& m, std::size_t k) {
  std::vector<double> a(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i * k + j] = m(i, j);
  double det = 1.0, pmax = 0.0, pmin = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t bi = p, bj = p;
    for (std::size_t i = p; i < k; ++i)
      for (std::size_t j = p; j < k; ++j)
        if (std::abs(a[i * k + j]) > std::abs(a[bi * k + bj])) bi = i, bj = j;
    const double piv = a[bi * k + bj];
    if (piv == 0.0) return {0.0, std::numeric_limits<double>::infinity()};
    if (bi != p) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[bi * k + j]);
      det = -det;
    }
    if (bj != p) {
      for (std::size_t i = 0; i < k; ++i) std::swap(a[i * k + p], a[i * k + bj]);
      det = -det;
    }
    det *= piv;
    pmax = std::max(pmax, std::abs(piv));
    pmin = std::min(pmin, std::abs(piv));
    for (std::size_t i = p + 1; i < k; ++i) {
      const double f = a[i * k + p] / piv;
      for (std::size_t j = p + 1; j < k; ++j) a[i * k + j] -= f * a[p * k + j];
    }
  }
  return {det, k == 0 ? 1.0 : pmax / pmin};
}

}  // namespace detail

/// Determinants of the top-left k x k blocks for k = 1..n. Entries are
/// finite doubles and hence dyadic rationals, so the exact path always applies.
inline std::vector<Minor> leading_minors(const Matrix& m) {
  for (double x : m.data)
    if (!std::isfinite(x)) raise(ErrorKind::NonfiniteValue, "matrix entry is not finite");
  auto [ints, e] = detail::to_dyadic_integers(m);
  std::vector<Minor> out;
  out.reserve(m.n);
  for (std::size_t k = 1; k <= m.n; ++k) {
    Minor mi;
    const auto det = detail::bareiss_det(ints, m.n, k);
    mi.sign = det > 0 ? 1 : (det < 0 ? -1 : 0);
    mi.value = detail::big_to_double(det, static_cast<long long>(e) * static_cast<long long>(k));
    const auto fd = detail::float_det(m, k);
    mi.float_value = fd.value;
    mi.condition = fd.condition;
    out.push_back(mi);
  }
  return out;
}

enum class MinorOutcome { AllPositive, PositiveThenZero, Fail };

inline const char* to_string(MinorOutcome v) noexcept {
  switch (v) {
    case MinorOutcome::AllPositive: return "all-positive";
    case MinorOutcome::PositiveThenZero: return "positive-then-zero";
    case MinorOutcome::Fail: return "fail";
  }
  return "unknown";
}

struct MinorVerdict {
  std::vector<Minor> minors;
  MinorOutcome verdict = MinorOutcome::AllPositive;
  std::optional<std::size_t> fail_index;  ///< 1-based
  std::vector<std::string> notes;

  bool pass() const noexcept { return verdict != MinorOutcome::Fail; }
};

/// Default matrix order: twice the number of nonzero coefficients plus two.
inline std::size_t default_grommer_order(const std::vector<double>& coeffs) {
  const auto nnz = static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](double x) { return x != 0.0; }));
  return 2 * nnz + 2;
}

/// Negativity of the zeros of sum coeffs[k] w^k via the leading minors. The
/// coefficients are first multiplied by the sign of the constant term, which
/// leaves the zeros unchanged and keeps the arithmetic exact.
inline MinorVerdict negativity_verdict(std::vector<double> coeffs, std::size_t order = 0) {
  if (order == 0) order = default_grommer_order(coeffs);
  if (!coeffs.empty() && coeffs[0] < 0)
    for (double& x : coeffs) x = -x;
  MinorVerdict v;
  v.minors = leading_minors(grommer_matrix(coeffs, order));
  std::size_t k = 0;
  while (k < v.minors.size() && v.minors[k].sign > 0) ++k;
  if (k == v.minors.size()) {
    v.verdict = MinorOutcome::AllPositive;
  } else if (v.minors[k].sign < 0) {
    v.verdict = MinorOutcome::Fail;
    v.fail_index = k + 1;
  } else {
    std::size_t t = k;
    while (t < v.minors.size() && v.minors[t].sign == 0) ++t;
    if (k == 0 || t < v.minors.size()) {
      v.verdict = MinorOutcome::Fail;
      v.fail_index = (k == 0 ? 0 : t) + 1;
    } else {
      v.verdict = MinorOutcome::PositiveThenZero;
    }
  }
  std::size_t last = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0.0) last = i;
  if (last == 0) v.notes.emplace_back("constant series");
  if (v.verdict == MinorOutcome::AllPositive && last > 0 && order <= 2 * last)
    v.notes.emplace_back("order too small to reach the zero tail");
  return v;
}

}  // namespace zeroloc
