#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/generators.hpp"
#include "zeroloc/roots.hpp"
#include "zeroloc/verdict.hpp"

using namespace zeroloc;
using std::numbers::pi;

namespace {

StructuredFunction fig3() { return build_structured(60.0, {2.0, 2.5, 3.0, 4.0}, Complex{5.0, 5.0}, 0, {1.0, 5.0}); }

ZeroList list_of(std::initializer_list<Complex> zs) {
  ZeroList zl;
  for (const auto& z : zs) zl.entries.push_back({z, 1});
  return zl;
}

bool clause_passes(const DistributionReport& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return c.pass;
  for (const auto& c : r.first_zero)
    if (c.name == name) return c.pass;
  ADD_FAILURE() << "no clause " << name;
  return false;
}

}  // namespace

TEST(ClassifyCase, Examples) {
  EXPECT_EQ(classify_case(-Complex{1, 1} / std::sqrt(2.0)), 1);
  EXPECT_EQ(classify_case(-1.0), 3);
  EXPECT_EQ(classify_case(std::polar(1.0, -pi / 4)), 2);
  EXPECT_EQ(classify_case(Complex{0, 1}), 4);
}

TEST(ClassifyCase, EvenInC) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> A(-pi, pi);
  for (int k = 0; k < 1000; ++k) {
    const Complex c = std::polar(1.0, A(rng));
    EXPECT_EQ(classify_case(c), classify_case(-c));
  }
  for (Complex c : {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}})
    EXPECT_EQ(classify_case(c), classify_case(-c));
}

TEST(FirstZero, ListedQuadrants) {
  // Case 1, even j: Q1 -> Q4, Q2 -> Q3, Q3 -> Q2, Q4 -> Q1.
  const Complex q1 = std::polar(1.0, pi / 8), q2 = std::polar(1.0, pi - pi / 8);
  const Complex q3 = std::polar(1.0, -pi + pi / 8), q4 = std::polar(1.0, -pi / 8);
  EXPECT_EQ(listed_first_quadrant(q1, 0), 4);
  EXPECT_EQ(listed_first_quadrant(q2, 0), 3);
  EXPECT_EQ(listed_first_quadrant(q3, 0), 2);
  EXPECT_EQ(listed_first_quadrant(q4, 0), 1);
  // Odd j: the same table after c -> -c.
  EXPECT_EQ(listed_first_quadrant(q1, 1), 2);
  EXPECT_EQ(listed_first_quadrant(q4, 1), 3);
}

TEST(FirstZero, PredicateExamples) {
  // Case 1, c in Q1, j even: z1 in Q4.
  const auto p1 = expected_first_zero(std::polar(1.0, pi / 8), 0);
  EXPECT_EQ(p1.case_id, 1);
  EXPECT_TRUE(p1(Complex{1, -1}));
  EXPECT_FALSE(p1(Complex{1, 1}));
  EXPECT_FALSE(p1(Complex{-1, 1}));
  // Case 3, c = -1, j = 0: Re z1 < 0 and Re z1 Im z1 <= 0.
  const auto p3 = expected_first_zero(-1.0, 0);
  EXPECT_TRUE(p3(Complex{-0.5, 0.8}));
  EXPECT_TRUE(p3(Complex{-0.5, 0.0}));
  EXPECT_FALSE(p3(Complex{-0.5, -0.8}));
  EXPECT_FALSE(p3(Complex{0.5, -0.8}));
  // Case 2, c = e^{-i pi/4} (Q4), j = 0: z1 in Q1.
  const auto p2 = expected_first_zero(std::polar(1.0, -pi / 4), 0);
  EXPECT_EQ(p2.case_id, 2);
  EXPECT_TRUE(p2(Complex{1, 1}));
  EXPECT_FALSE(p2(Complex{1, -1}));
}

TEST(FirstZero, TablesAgreeWithSignClauses) {
  // The hard-coded listing and the sign clauses must select the same quadrant.
  for (unsigned j = 0; j < 4; ++j) {
    for (double a : {pi / 8, 3 * pi / 8, 5 * pi / 8, 7 * pi / 8, -pi / 8, -3 * pi / 8, -5 * pi / 8, -7 * pi / 8}) {
      const Complex c = std::polar(1.0, a);
      const auto pred = expected_first_zero(c, j);
      int hits = 0;
      for (int q = 1; q <= 4; ++q) {
        const Complex z = std::polar(1.0, pi / 4 + (q - 1) * pi / 2);
        if (pred(z)) {
          ++hits;
          EXPECT_EQ(q, listed_first_quadrant(c, j));
        }
      }
      EXPECT_EQ(hits, 1) << "c arg " << a << " j " << j;
    }
  }
}

TEST(Verify, QuadraticCase3) {
  const auto zl = find_roots(SeriesFunction({1.0, 1.0, 1.0}, Provenance::User));
  const auto r = verify_distribution(zl, -1.0, 0);
  EXPECT_EQ(r.case_id, 3);
  EXPECT_TRUE(r.overall);
  EXPECT_TRUE(clause_passes(r, "pairs (z_{2k-1}, z_{2k}) conjugate or real on one side"));
  EXPECT_TRUE(clause_passes(r, "first: (-1)^j c Re z1 > 0"));
  ASSERT_EQ(r.ordered.size(), 2u);
  EXPECT_LT(r.ordered[0].real(), 0);
  EXPECT_LE(r.ordered[0].real() * r.ordered[0].imag(), 0);
}

TEST(Verify, DegreeEightCase1) {
  const auto s = fig3();
  const auto r = verify_distribution(find_zeros(s), constant_c(s), 0);
  EXPECT_EQ(r.case_id, 1);
  EXPECT_TRUE(r.overall);
  const int want[] = {2, 3, 4, 1, 2, 3, 4, 1};
  ASSERT_EQ(r.ordered.size(), 8u);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(quadrant(r.ordered[static_cast<std::size_t>(k)]), want[k]);
}

TEST(Verify, DetectsSameQuadrantNeighbours) {
  const auto zl = list_of({Complex{-0.1, 1.0}, Complex{-0.2, 1.5}, Complex{0.5, -2.0}});
  const auto r = verify_distribution(zl, -Complex{1, 1} / std::sqrt(2.0), 0);
  EXPECT_FALSE(r.overall);
  EXPECT_FALSE(clause_passes(r, "quadrants cycle counterclockwise"));
}

TEST(Verify, TripleZeroFlagged) {
  ZeroList zl;
  zl.entries.push_back({Complex{-1, 0}, 3});
  const auto r = verify_distribution(zl, -1.0, 0);
  EXPECT_FALSE(r.overall);
  EXPECT_FALSE(clause_passes(r, "multiplicity <= 2"));
}

TEST(Verify, EmptyListRaises) { EXPECT_THROW(verify_distribution(ZeroList{}, -1.0, 0), Error); }

TEST(Verify, Case4MirrorPairs) {
  // 1 + i z + z^2 has zeros i(-1 +- sqrt 5)/2: both imaginary, opposite sides.
  const auto s = build_structured(1.0, {1.0}, Complex{0, 1}, 0, {});
  const auto r = verify_distribution(find_zeros(s), constant_c(s), 0);
  EXPECT_EQ(r.case_id, 4);
  EXPECT_TRUE(r.overall);
}

// ---- properties ----------------------------------------------------------

TEST(VerdictProperty, TheoremHoldsOnGeneratorSuite) {
  gen::StructuredGen g(4242);
  int per_case[5] = {0, 0, 0, 0, 0};
  for (int t = 0; t < 400; ++t) {
    const auto s = g.next();
    const auto r = verify_distribution(find_zeros(s), constant_c(s), s.j());
    ++per_case[r.case_id];
    if (!r.overall) {
      std::string why;
      for (const auto& c : r.clauses)
        if (!c.pass) why += c.name + ": " + c.witness + "; ";
      for (const auto& c : r.first_zero)
        if (!c.pass) why += c.name + ": " + c.witness + "; ";
      ADD_FAILURE() << "trial " << t << " case " << r.case_id << ": " << why;
    }
  }
  for (int k = 1; k <= 4; ++k) EXPECT_GT(per_case[k], 10) << "case " << k;
}

TEST(VerdictProperty, ReportsAreDeterministic) {
  gen::StructuredGen g(7);
  for (int t = 0; t < 20; ++t) {
    const auto s = g.next();
    const auto zl = find_zeros(s);
    const auto a = verify_distribution(zl, constant_c(s), s.j());
    const auto b = verify_distribution(zl, constant_c(s), s.j());
    ASSERT_EQ(a.clauses.size(), b.clauses.size());
    for (std::size_t k = 0; k < a.clauses.size(); ++k) {
      EXPECT_EQ(a.clauses[k].name, b.clauses[k].name);
      EXPECT_EQ(a.clauses[k].pass, b.clauses[k].pass);
    }
  }
}
