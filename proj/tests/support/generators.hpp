#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "zeroloc/model.hpp"

namespace gen {

using zeroloc::Complex;

/// Random structured functions: up to max_factors factors per part, factors
/// log-uniform in [lo, hi], j in {0, .., max_j}, random phases for f0 and g0.
/// Four draws in ten put c on an axis so cases 3 and 4 are exercised.
struct StructuredGen {
  std::mt19937_64 rng;
  int max_factors = 4;
  unsigned max_j = 2;
  double lo = 0.1, hi = 10.0;

  explicit StructuredGen(std::uint64_t seed) : rng(seed) {}

  double log_uniform() {
    std::uniform_real_distribution<double> U(std::log(lo), std::log(hi));
    return std::exp(U(rng));
  }

  double phase() {
    std::uniform_real_distribution<double> A(-std::numbers::pi, std::numbers::pi);
    return A(rng);
  }

  zeroloc::StructuredFunction next() {
    std::uniform_int_distribution<int> K(0, max_factors), sel(0, 9);
    std::uniform_int_distribution<unsigned> J(0, max_j);
    for (;;) {
      std::vector<double> b, a;
      const int nb = K(rng), na = K(rng);
      const unsigned j = J(rng);
      for (int i = 0; i < nb; ++i) b.push_back(log_uniform());
      for (int i = 0; i < na; ++i) a.push_back(log_uniform());
      if (nb == 0 && na == 0) continue;
      double c_arg = phase();
      switch (sel(rng)) {
        case 0: c_arg = 0; break;
        case 1: c_arg = std::numbers::pi; break;
        case 2: c_arg = std::numbers::pi / 2; break;
        case 3: c_arg = -std::numbers::pi / 2; break;
        default: break;
      }
      const Complex f0 = std::polar(log_uniform(), phase());
      const Complex g0 = -std::polar(log_uniform(), c_arg) * f0 / std::abs(f0);
      return zeroloc::build_structured(f0, std::move(b), g0, j, std::move(a));
    }
  }
};

/// Coefficients of prod (1 + s_k x) with dyadic s_k = k/16, k in 1..64, so
/// every coefficient is an exact double; the zeros are at -1/s_k.
struct DyadicProductGen {
  std::mt19937_64 rng;
  explicit DyadicProductGen(std::uint64_t seed) : rng(seed) {}

  std::vector<double> scales(int max_factors = 5) {
    std::uniform_int_distribution<int> K(1, max_factors), S(1, 64);
    std::vector<double> s(static_cast<std::size_t>(K(rng)));
    for (auto& x : s) x = S(rng) / 16.0;
    return s;
  }

  static std::vector<double> expand(const std::vector<double>& s) {
    std::vector<double> p{1.0};
    for (double sk : s) {
      p.push_back(0.0);
      for (std::size_t k = p.size() - 1; k > 0; --k) p[k] += sk * p[k - 1];
    }
    return p;
  }
};

}  // namespace gen
