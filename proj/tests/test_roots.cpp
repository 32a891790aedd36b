#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles/argument_principle.hpp"
#include "support/generators.hpp"
#include "zeroloc/qtheta.hpp"
#include "zeroloc/roots.hpp"

using namespace zeroloc;

namespace {

StructuredFunction fig3() { return build_structured(60.0, {2.0, 2.5, 3.0, 4.0}, Complex{5.0, 5.0}, 0, {1.0, 5.0}); }
StructuredFunction quad() { return build_structured(1.0, {1.0}, 1.0, 0, {}); }

std::vector<oracle::OracleZero> oracle_zeros(const StructuredFunction& s) {
  const auto series = expand_to_series(s);
  double bound = 0;  // Cauchy bound
  const auto n = series.degree();
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(series[k] / series[n]));
  const double R = 1.0 + bound + 0.0123;
  oracle::ArgumentPrinciple ap([&](Complex z) { return eval_F(s, z); }, [&](Complex z) { return eval_dF(s, z); });
  return ap.zeros({-R, R * 1.0007, -R * 0.9993, R});
}

}  // namespace

TEST(TrustRadius, ExactPolynomialIsUnbounded) {
  EXPECT_TRUE(SeriesFunction({1.0, 1.0, 1.0}, Provenance::User).trust().unbounded());
  std::vector<Complex> c(20, Complex{});
  c[0] = 1.0;
  EXPECT_TRUE(SeriesFunction(c, Provenance::QExponential).trust().unbounded());
}

TEST(TrustRadius, QExponentialRegression) {
  const auto s = qexp_series(0.5, 40);
  const TrustDisk d = trust_radius(s);
  EXPECT_NEAR(d.radius / 44338987378.046921, 1.0, 1e-9);
  // Tail proxy sits below the threshold against the largest term at that radius.
  EXPECT_GT(d.tail_bound, 0.0);
  EXPECT_TRUE(std::isfinite(d.tail_bound));
}

TEST(FindRoots, Quadratic) {
  const auto zl = find_roots(SeriesFunction({1.0, 1.0, 1.0}, Provenance::User));
  ASSERT_EQ(zl.entries.size(), 2u);
  const Complex a{-0.5, -std::sqrt(3.0) / 2}, b{-0.5, std::sqrt(3.0) / 2};
  EXPECT_LT(std::abs(zl.entries[0].location - a), 1e-14);
  EXPECT_LT(std::abs(zl.entries[1].location - b), 1e-14);
  EXPECT_EQ(zl.entries[0].multiplicity, 1);
  EXPECT_EQ(zl.entries[1].multiplicity, 1);
}

TEST(FindRoots, DoubleRoot) {
  const auto zl = find_roots(SeriesFunction({1.0, 2.0, 1.0}, Provenance::User));
  ASSERT_EQ(zl.entries.size(), 1u);
  EXPECT_LT(std::abs(zl.entries[0].location + 1.0), 1e-7);
  EXPECT_EQ(zl.entries[0].multiplicity, 2);
}

TEST(FindRoots, RootsAtOrigin) {
  const auto zl = find_roots(SeriesFunction({0.0, 0.0, -1.0, 1.0}, Provenance::User));
  ASSERT_EQ(zl.entries.size(), 2u);
  EXPECT_EQ(zl.entries[0].location, Complex{});
  EXPECT_EQ(zl.entries[0].multiplicity, 2);
  EXPECT_LT(std::abs(zl.entries[1].location - 1.0), 1e-14);
}

TEST(FindRoots, ConstantIsEmpty) {
  EXPECT_THROW(find_roots(SeriesFunction({3.0}, Provenance::User)), Error);
}

TEST(FindRoots, DegreeEightAgainstOracle) {
  const auto s = fig3();
  const auto zl = find_roots(expand_to_series(s));
  const auto oz = oracle_zeros(s);
  ASSERT_EQ(zl.entries.size(), 8u);
  ASSERT_EQ(oz.size(), 8u);
  for (const auto& z : zl.entries) {
    double best = 1e300;
    for (const auto& o : oz) best = std::min(best, std::abs(o.location - z.location));
    EXPECT_LT(best, 1e-8);
  }
}

TEST(Cluster, Examples) {
  auto a = cluster_multiplicities({Complex{-1.0 + 1e-9, 0}, Complex{-1.0 - 1e-9, 0}});
  ASSERT_EQ(a.entries.size(), 1u);
  EXPECT_EQ(a.entries[0].multiplicity, 2);
  EXPECT_LT(std::abs(a.entries[0].location + 1.0), 1e-12);

  auto b = cluster_multiplicities({Complex{1, 0}, Complex{2, 0}});
  ASSERT_EQ(b.entries.size(), 2u);
  EXPECT_EQ(b.entries[0].multiplicity, 1);

  auto c = cluster_multiplicities({Complex{1, 0}, Complex{1 + 5e-10, 0}, Complex{1, 5e-10}});
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(c.entries[0].multiplicity, 3);
}

TEST(Sort, TiesByArgument) {
  auto zl = cluster_multiplicities({Complex{0, 1}, Complex{1, 0}, Complex{0, -1}, Complex{-1, 0}, Complex{0.5, 0}});
  ASSERT_EQ(zl.entries.size(), 5u);
  EXPECT_EQ(zl.entries[0].location, Complex(0.5, 0));
  EXPECT_EQ(zl.entries[1].location, Complex(0, -1));
  EXPECT_EQ(zl.entries[2].location, Complex(1, 0));
  EXPECT_EQ(zl.entries[3].location, Complex(0, 1));
  EXPECT_EQ(zl.entries[4].location, Complex(-1, 0));
}

TEST(Polish, ConvergesToKnownRoot) {
  const Complex z = polish_on_function(quad(), Complex{-0.49, 0.87});
  EXPECT_LT(std::abs(z - Complex{-0.5, std::sqrt(3.0) / 2}), 1e-13);
}

TEST(Polish, DegreeEightResiduals) {
  const auto s = fig3();
  const auto series = expand_to_series(s);
  for (const auto& z : find_roots(series).entries) {
    const Complex p = polish_on_function(s, z.location);
    EXPECT_LT(std::abs(eval_F(s, p)), 1e-11 * series.magnitude(p));
  }
}

TEST(Polish, FarStartIsGuarded) {
  // Either a guard fires or Newton lands on a genuine zero.
  try {
    const Complex z = polish_on_function(quad(), 100.0);
    EXPECT_LT(std::abs(eval_F(quad(), z)), 1e-10);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NewtonDiverged);
  }
}

TEST(FindZeros, LinearIsAnalytic) {
  const auto zl = find_zeros(build_structured(2.0, {}, Complex{0, 1}, 0, {}));
  ASSERT_EQ(zl.entries.size(), 1u);
  EXPECT_LT(std::abs(zl.entries[0].location - Complex{0, 2}), 1e-15);
}

// ---- properties ----------------------------------------------------------

TEST(RootsProperty, CompletenessAndOracleEquivalence) {
  gen::StructuredGen g(2024);
  for (int t = 0; t < 100; ++t) {
    const auto s = g.next();
    const auto zl = find_zeros(s);
    EXPECT_EQ(zl.count_with_multiplicity(), s.degree());
    const auto oz = oracle_zeros(s);
    int oracle_total = 0;
    for (const auto& o : oz) oracle_total += o.multiplicity;
    ASSERT_EQ(static_cast<std::size_t>(oracle_total), s.degree()) << "trial " << t;
    for (const auto& z : zl.entries) {
      double best = 1e300;
      int mult = 0;
      for (const auto& o : oz) {
        const double d = std::abs(o.location - z.location);
        if (d < best) best = d, mult = o.multiplicity;
      }
      EXPECT_LT(best, 1e-8 * std::max(1.0, std::abs(z.location))) << "trial " << t;
      EXPECT_EQ(mult, z.multiplicity) << "trial " << t;
    }
  }
}

TEST(RootsProperty, TruncationStability) {
  for (Complex q : {Complex{0.5, 0}, Complex{-0.6, 0}, Complex{0, 0.7}, Complex{0.3, 0.4}}) {
    const auto a = find_roots(qexp_series(q, 60));
    const auto b = find_roots(qexp_series(q, 80));
    ASSERT_FALSE(a.entries.empty());
    for (const auto& z : a.entries) {
      double best = 1e300;
      for (const auto& w : b.entries) best = std::min(best, std::abs(w.location - z.location));
      EXPECT_LT(best, 1e-9 * std::max(1.0, std::abs(z.location))) << "q = " << q;
    }
  }
}

TEST(RootsProperty, DeterministicOrdering) {
  gen::StructuredGen g(99);
  for (int t = 0; t < 20; ++t) {
    const auto s = g.next();
    const auto a = find_zeros(s), b = find_zeros(s);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t k = 0; k < a.entries.size(); ++k) EXPECT_EQ(a.entries[k].location, b.entries[k].location);
  }
}

TEST(RootsProperty, SortedAndSeparated) {
  gen::StructuredGen g(5);
  for (int t = 0; t < 50; ++t) {
    const auto zl = find_zeros(g.next());
    for (std::size_t k = 0; k + 1 < zl.entries.size(); ++k) {
      const Complex a = zl.entries[k].location, b = zl.entries[k + 1].location;
      EXPECT_LE(std::abs(a), std::abs(b) * (1 + 1e-9));
      EXPECT_GT(std::abs(a - b), 1e-6 * std::max(1.0, std::abs(a)));
    }
  }
}
