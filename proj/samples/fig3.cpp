// Zeros of the degree-8 example F(z) = f(z^2) + z g(z^2) with
// f(w) = (w+2)(w+2.5)(w+3)(w+4) and g(w) = (1+i)(w-1)(w-5),
// together with the distribution check.

#include <cstdio>

#include "zeroloc/zeroloc.hpp"

int main() {
  using namespace zeroloc;
  const auto F = build_structured(60.0, {2.0, 2.5, 3.0, 4.0}, Complex{5.0, 5.0}, 0, {1.0, 5.0});
  const Complex c = constant_c(F);
  const ZeroList zeros = find_zeros(F);
  std::printf("c = %.6f %+.6fi (case %d)\n", c.real(), c.imag(), classify_case(c));
  for (const auto& z : zeros.entries)
    std::printf("  z = %+.6f %+.6fi  |z| = %.5f  Q%d\n", z.location.real(), z.location.imag(), std::abs(z.location),
                quadrant(z.location));
  const auto report = verify_distribution(zeros, c, F.j());
  for (const auto& cl : report.clauses) std::printf("  %-40s %s\n", cl.name.c_str(), cl.pass ? "ok" : "FAILED");
  for (const auto& cl : report.first_zero) std::printf("  %-40s %s\n", cl.name.c_str(), cl.pass ? "ok" : "FAILED");
  std::printf("overall: %s\n", report.overall ? "pass" : "fail");
  return report.overall ? 0 : 1;
}
