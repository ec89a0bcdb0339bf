#include <doctest.h>

#include <map>
#include <random>

#include "mperron/errors.hpp"
#include "mperron/integer.hpp"
#include "oracles.hpp"

using namespace mperron;

TEST_CASE("is_prime matches trial division below 200000") {
  for (std::uint64_t n = 0; n < 200000; ++n) {
    REQUIRE_MESSAGE(is_prime(Integer(static_cast<unsigned long>(n))) == oracle::is_prime(n), n);
  }
}

TEST_CASE("is_prime on large inputs") {
  CHECK(is_prime(Integer("2305843009213693951")));                      // 2^61 - 1
  CHECK(is_prime(Integer("618970019642690137449562111")));              // 2^89 - 1
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(Integer(561)));
  CHECK_FALSE(is_prime(Integer("3215031751")));  // strong pseudoprime to 2, 3, 5, 7
  // Strong pseudoprime to every base up to 37; the Lucas stage must reject it.
  CHECK_FALSE(is_prime(Integer("3317044064679887385961981")));
  CHECK_FALSE(is_prime(Integer("2305843009213693951") * Integer("618970019642690137449562111")));
  CHECK_FALSE(is_prime(Integer(-7)));
}

TEST_CASE("factorize examples") {
  const Factorization f = factorize(Integer("18446744073709551617"));  // 2^64 + 1
  REQUIRE(f.complete);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{Integer(274177), 1});
  CHECK(f.factors[1] == PrimePower{Integer("67280421310721"), 1});

  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).complete);
  CHECK(factorize(Integer(45)).factors == std::vector<PrimePower>{{3, 2}, {5, 1}});
  CHECK_THROWS_AS(factorize(0), InvalidInput);
  CHECK_THROWS_AS(factorize(-4), InvalidInput);
}

TEST_CASE("factorize recovers random products of primes") {
  std::mt19937_64 rng(20240601);
  const std::vector<Integer> pool = {2, 3, 7, 999983, Integer(1000003), Integer("1000000007"), Integer("998244353"),
                                     Integer("2305843009213693951")};
  for (int trial = 0; trial < 60; ++trial) {
    Integer n = 1;
    std::map<Integer, unsigned> expected;
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < parts; ++k) {
      const Integer& p = pool[rng() % pool.size()];
      n *= p;
      ++expected[p];
    }
    const Factorization f = factorize(n);
    REQUIRE(f.complete);
    CHECK(f.product() == n);
    REQUIRE(f.factors.size() == expected.size());
    for (const auto& [p, e] : f.factors) CHECK(expected[p] == e);
  }
}

TEST_CASE("factorize respects a zero rho budget") {
  const Integer p("1000000007");
  const Integer q("998244353");
  const Factorization f = factorize(p * q * 12, 0);
  CHECK_FALSE(f.complete);
  CHECK(f.cofactor == p * q);
  CHECK(f.product() == p * q * 12);
  CHECK(f.exponent_of(2) == 2);
  CHECK(f.exponent_of(3) == 1);
}

TEST_CASE("squarefree_status matches the naive oracle below 200000") {
  for (std::uint64_t n = 1; n < 200000; ++n) {
    const SquarefreeStatus s = squarefree_status(Integer(static_cast<unsigned long>(n)));
    REQUIRE(s.kind != SquarefreeStatus::Kind::Unknown);
    REQUIRE_MESSAGE(s.is_squarefree() == oracle::is_squarefree(n), n);
    if (!s.is_squarefree()) {
      const unsigned long w = s.witness.get_ui();
      CHECK(n % (w * w) == 0);
    }
  }
}

TEST_CASE("squarefree_status on large inputs") {
  const Integer p("1000000007");
  const Integer q("998244353");
  CHECK(squarefree_status(p * q).is_squarefree());
  CHECK(squarefree_status(p * q * 6).is_squarefree());
  CHECK(squarefree_status(p * p * q) == SquarefreeStatus::not_squarefree(p));
  CHECK(squarefree_status(p * p * p) == SquarefreeStatus::not_squarefree(p));
  CHECK(squarefree_status(Integer(13)).is_squarefree());
  CHECK(squarefree_status(Integer(45)) == SquarefreeStatus::not_squarefree(3));
  // Three large primes with no budget cannot be decided.
  const Integer r("1000000009");
  CHECK(squarefree_status(p * q * r, 0).kind == SquarefreeStatus::Kind::Unknown);
  CHECK(squarefree_status(p * q * r).is_squarefree());
  CHECK_THROWS_AS(squarefree_status(0), InvalidInput);
}

TEST_CASE("valuation, pow and exact_root") {
  CHECK(valuation(3, 45) == 2);
  CHECK(valuation(5, 45) == 1);
  CHECK(valuation(7, 45) == 0);
  CHECK(valuation(2, -8) == 3);
  CHECK_THROWS_AS(valuation(2, 0), InvalidInput);
  CHECK_THROWS_AS(valuation(1, 5), InvalidInput);
  CHECK(pow(Integer(3), 4) == 81);
  CHECK(pow(Integer(-2), 3) == -8);
  Integer r;
  CHECK(exact_root(Integer(1000000), 3, r));
  CHECK(r == 100);
  CHECK_FALSE(exact_root(Integer(1000001), 3, r));
  CHECK(to_string(SquarefreeStatus::Kind::NotSquarefree) == "NotSquarefree");
}
