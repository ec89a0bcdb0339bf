#include <doctest.h>

#include <cmath>
#include <random>

#include "mperron/errors.hpp"
#include "mperron/irreducibility.hpp"
#include "mperron/roots.hpp"
#include "mperron/verify.hpp"
#include "oracles.hpp"

using namespace mperron;

namespace {

// Exact root (as MPFR at 256 bits) lies inside one of the disks.
bool some_disk_contains(const CertifiedRootSet& set, const Real& re, const Real& im) {
  for (const auto& d : set.roots) {
    const Complex z(re, im);
    if (abs(z - d.center) <= d.radius) return true;
  }
  return false;
}

Real quadratic_root(long b, long c, int sign) {
  // Real root of x^2 + b x + c.
  Real disc(Integer(b * b - 4 * c), 256);
  return (Real(Integer(-b), 256) + Real(static_cast<double>(sign), 256) * sqrt(disc)) / Real(2.0, 256);
}

}  // namespace

TEST_CASE("x^2 - x - 3 roots to 1e-20") {
  const CertifiedRootSet s = complex_roots(IntPoly{-3, -1, 1}, 70);
  REQUIRE(s.certified);
  REQUIRE(s.roots.size() == 2);
  for (const auto& d : s.roots) CHECK(d.radius < 1e-20);
  CHECK(some_disk_contains(s, quadratic_root(-1, -3, 1), Real(256)));
  CHECK(some_disk_contains(s, quadratic_root(-1, -3, -1), Real(256)));
}

TEST_CASE("golden ratio and x^2 + 1") {
  const CertifiedRootSet g = complex_roots(IntPoly{-1, -1, 1});
  CHECK(some_disk_contains(g, quadratic_root(-1, -1, 1), Real(256)));
  CHECK(some_disk_contains(g, quadratic_root(-1, -1, -1), Real(256)));
  const CertifiedRootSet i = complex_roots(IntPoly{1, 0, 1});
  CHECK(some_disk_contains(i, Real(256), Real(1.0, 256)));
  CHECK(some_disk_contains(i, Real(256), Real(-1.0, 256)));
}

TEST_CASE("disks contain the exact roots of random real-rooted quadratics") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-1000, 1000);
  int tested = 0;
  while (tested < 100) {
    const long b = c(rng), k = c(rng);
    if (b * b - 4 * k <= 0) continue;
    const IntPoly f{k, b, 1};
    if (gcd(f, derivative(f)).degree() > 0) continue;
    const CertifiedRootSet s = complex_roots(f);
    REQUIRE(s.certified);
    CHECK(some_disk_contains(s, quadratic_root(b, k, 1), Real(256)));
    CHECK(some_disk_contains(s, quadratic_root(b, k, -1), Real(256)));
    ++tested;
  }
}

TEST_CASE("certified disks satisfy the Vieta residual bounds") {
  std::mt19937_64 rng(31);
  int tested = 0;
  while (tested < 80) {
    const IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 12), 40, true);
    if (gcd(f, derivative(f)).degree() > 0) continue;
    const CertifiedRootSet s = complex_roots(f);
    REQUIRE(s.certified);
    REQUIRE(s.roots.size() == static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
      for (std::size_t j = i + 1; j < s.roots.size(); ++j) CHECK_FALSE(disks_intersect(s.roots[i], s.roots[j]));
    }
    CHECK(vieta_residuals_ok(f, s));
    ++tested;
  }
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(complex_roots(IntPoly{5}), InvalidInput);
  CHECK_THROWS_AS(complex_roots(IntPoly{1, 2, 1}), InvalidInput);
}

TEST_CASE("nearly coincident roots exhaust a small budget") {
  // x^2 - 2M x + M^2 - 2 has roots M +- sqrt(2).
  const Integer m = pow(Integer(10), 60);
  const IntPoly f(std::vector<Integer>{m * m - 2, -2 * m, 1});
  RootOptions tight;
  tight.start_bits = 32;
  tight.max_escalations = 1;
  CHECK_THROWS_AS(complex_roots(f, 48, tight), PrecisionExhausted);
  RootOptions roomy;
  roomy.start_bits = 64;
  roomy.max_escalations = 5;
  CHECK(complex_roots(f, 48, roomy).certified);
}

TEST_CASE("modulus bounds") {
  const CertifiedRootSet s = complex_roots(IntPoly{-5, 0, -1, 1});
  int outside = 0;
  for (const auto& d : s.roots) {
    if (modulus_lower_bound(d) > 1.0) ++outside;
    CHECK(modulus_lower_bound(d) <= modulus_upper_bound(d));
  }
  CHECK(outside == 3);
}
