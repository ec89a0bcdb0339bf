#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mperron/errors.hpp"
#include "mperron/poly.hpp"
#include "oracles.hpp"

using namespace mperron;

TEST_CASE("IntPoly basics") {
  const IntPoly f{-3, -1, 1};
  CHECK(f.degree() == 2);
  CHECK(f.is_monic());
  CHECK(f[5] == 0);
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{1, 2, 0} == IntPoly{1, 2});
  CHECK(f * IntPoly{1, 1} == IntPoly{-3, -4, 0, 1});
  CHECK(f - f == IntPoly{});
  CHECK(-f == IntPoly{3, 1, -1});
  CHECK(IntPoly::monomial(5, 3) == IntPoly{0, 0, 0, 5});
  CHECK(derivative(f) == IntPoly{-1, 2});
  CHECK(evaluate(f, 3) == 3);
  CHECK(content(IntPoly{6, -4, 2}) == 2);
  CHECK(primitive_part(IntPoly{-6, 4, -2}) == IntPoly{3, -2, 1});
}

TEST_CASE("text format") {
  CHECK(parse_poly("-3,-1,1") == IntPoly{-3, -1, 1});
  CHECK(parse_poly(" 1 , 0 , 1 ") == IntPoly{1, 0, 1});
  CHECK(format_poly(IntPoly{-3, -1, 1}) == "-3,-1,1");
  CHECK(pretty(IntPoly{-3, -1, 1}) == "x^2 - x - 3");
  CHECK(pretty(IntPoly{-5, 0, 0, -3, 1}) == "x^4 - 3x^3 - 5");
  CHECK_THROWS_AS(parse_poly(""), InvalidInput);
  CHECK_THROWS_AS(parse_poly("1,,2"), InvalidInput);
  CHECK_THROWS_AS(parse_poly("1,x"), InvalidInput);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 8), 1000, false);
    CHECK(parse_poly(format_poly(f)) == f);
  }
}

TEST_CASE("exact division and gcd") {
  const IntPoly a{-1, 0, 1};  // x^2 - 1
  CHECK(divide_exact(a, IntPoly{1, 1}) == IntPoly{-1, 1});
  CHECK_FALSE(try_divide_exact(a, IntPoly{2, 1}).has_value());
  CHECK_THROWS_AS(divide_exact(a, IntPoly{2, 1}), std::domain_error);
  CHECK(gcd(a, IntPoly{1, 2, 1}) == IntPoly{1, 1});
  CHECK(gcd(IntPoly{2, 2}, IntPoly{4, 4}) == IntPoly{1, 1});
  CHECK(gcd(IntPoly{1, 0, 1}, IntPoly{-1, 1}).degree() == 0);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9, true);
    const IntPoly u = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9, true);
    const IntPoly v = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9, true);
    const IntPoly d = gcd(g * u, g * v);
    CHECK(try_divide_exact(d, g).has_value());
    CHECK(try_divide_exact(g * u, d).has_value());
    CHECK(try_divide_exact(g * v, d).has_value());
  }
}

TEST_CASE("pseudo remainder has lower degree and is a combination") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const IntPoly a = oracle::random_poly(rng, 3 + static_cast<int>(rng() % 4), 20, false);
    const IntPoly b = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 20, false);
    const IntPoly r = pseudo_remainder(a, b);
    CHECK(r.degree() < b.degree());
    const int k = a.degree() - b.degree() + 1;
    const IntPoly scaled = a * pow(b.leading(), static_cast<unsigned long>(k)) - r;
    CHECK(try_divide_exact(scaled, b).has_value());
  }
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 120; ++i) {
    const IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 30, false);
    const IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 30, false);
    REQUIRE(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
  CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 1}) == 7);
  CHECK(resultant(IntPoly{5}, IntPoly{1, 2, 3}) == 25);
  CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), InvalidInput);
}

TEST_CASE("discriminant") {
  CHECK(discriminant_resultant(IntPoly{-3, -1, 1}) == 13);
  CHECK(discriminant_resultant(IntPoly{-11, -1, 1}) == 45);
  CHECK(discriminant_resultant(IntPoly{-2, 0, -1, 1}) == -116);
  CHECK(discriminant_resultant(IntPoly{-5, 0, 0, -3, 1}) == -86675);
  CHECK_THROWS_AS(discriminant_resultant(IntPoly{1, 1}), InvalidInput);

  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<long> c(-50, 50);
    const long b = c(rng), cc = c(rng), d = c(rng);
    REQUIRE(discriminant_resultant(IntPoly{d, cc, b, 1}) == oracle::cubic_discriminant(b, cc, d));
    REQUIRE(discriminant_resultant(IntPoly{cc, b, 1}) == Integer(b) * b - 4 * Integer(cc));
  }
  // Non-monic: disc(a x^2 + b x + c) = b^2 - 4ac.
  CHECK(discriminant_resultant(IntPoly{3, 5, 2}) == 1);
}

TEST_CASE("structure predicates") {
  CHECK(is_self_reciprocal(IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}));
  CHECK_FALSE(is_self_reciprocal(IntPoly{-1, -1, 1}));
  CHECK(exponent_stride(IntPoly{-2, 0, 1}) == 2);
  CHECK(exponent_stride(IntPoly{-2, 0, 0, 0, 0, 0, 1}) == 6);
  CHECK(exponent_stride(IntPoly{1, 0, 0, 1, 0, 0, 1}) == 3);
  CHECK(exponent_stride(IntPoly{-3, -1, 1}) == 1);
}

TEST_CASE("ModPoly arithmetic") {
  const ModPoly f(IntPoly{-11, -1, 1}, 3);
  CHECK(f == ModPoly(3, {1, 2, 1}));
  CHECK(gcd_mod(f, derivative(f)) == ModPoly(3, {1, 1}));
  CHECK(radical(f) == ModPoly(3, {1, 1}));
  CHECK(radical(ModPoly(IntPoly{2, 3, 1}, 7)) == ModPoly(7, {2, 3, 1}));
  // x^9 - 1 = (x - 1)^9 over F_3.
  CHECK(radical(ModPoly(IntPoly{-1, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 3)) == ModPoly(3, {2, 1}));
  // (x^2 + 1)^3 (x + 1)^2 over F_3: radical (x^2 + 1)(x + 1).
  const ModPoly s(IntPoly{1, 0, 1}, 3);
  const ModPoly t(IntPoly{1, 1}, 3);
  CHECK(radical(s * s * s * t * t) == s * t);
  CHECK_THROWS_AS(gcd_mod(ModPoly::zero(5), ModPoly::zero(5)), InvalidInput);
  CHECK_THROWS_AS(gcd_mod(ModPoly::one(5), ModPoly::one(7)), InvalidInput);
  CHECK(lift(ModPoly(IntPoly{-1, 2}, 5)) == IntPoly{4, 2});

  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const Integer q = std::vector<long>{2, 3, 5, 7, 13}[rng() % 5];
    const ModPoly a(oracle::random_poly(rng, 2 + static_cast<int>(rng() % 6), 50, false), q);
    ModPoly b(oracle::random_poly(rng, static_cast<int>(rng() % 4), 50, false), q);
    if (b.is_zero()) continue;
    const ModDivision d = divmod(a, b);
    CHECK(d.remainder.degree() < b.degree());
    CHECK(d.quotient * b + d.remainder == a);
  }
}
