#include <doctest.h>

#include <algorithm>
#include <random>

#include "mperron/errors.hpp"
#include "mperron/family.hpp"
#include "mperron/irreducibility.hpp"
#include "oracles.hpp"

using namespace mperron;

namespace {

IntPoly product(const std::vector<IntPoly>& factors) {
  IntPoly out{1};
  for (const auto& f : factors) out = out * f;
  return out;
}

}  // namespace

TEST_CASE("criteria") {
  CHECK(perron_criterion(IntPoly{-1, 1, -5, 1}).criterion == "perron");
  CHECK(perron_criterion(IntPoly{1, -2, 1}).status == IrreducibilityVerdict::Status::Inconclusive);
  // Equality case: |a_{n-1}| = 1 + sum; f(1), f(-1) nonzero.
  CHECK(perron_criterion(IntPoly{1, 0, 2, 1}).criterion == "perron-equality");
  // Equality with f(-1) = 0 must not claim irreducibility: x^2 + 2x + 1.
  CHECK_FALSE(perron_criterion(IntPoly{1, 2, 1}).irreducible());

  CHECK(prime_constant_criterion(IntPoly{-5, 0, 0, -3, 1}).criterion == "prime-constant");
  CHECK_FALSE(prime_constant_criterion(IntPoly{-4, 0, -1, 1}).irreducible());

  const auto e = eisenstein(IntPoly{-6, 3, 0, 1});
  CHECK(e.criterion == "eisenstein");
  CHECK(e.prime == 3);
  CHECK_FALSE(eisenstein(IntPoly{-4, 2, 1}).irreducible());
  CHECK_THROWS_AS(perron_criterion(IntPoly{1, 2}), InvalidInput);
}

TEST_CASE("factor oracle on known inputs") {
  CHECK(factor_oracle(IntPoly{-3, -2, 1}) == std::vector<IntPoly>{IntPoly{-3, 1}, IntPoly{1, 1}});
  CHECK(factor_oracle(IntPoly{-3, -1, 1}) == std::vector<IntPoly>{IntPoly{-3, -1, 1}});
  // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
  CHECK(factor_oracle(IntPoly{4, 0, 0, 0, 1}) == std::vector<IntPoly>{IntPoly{2, -2, 1}, IntPoly{2, 2, 1}});
  // (x + 1)^2 (x^2 + 1)
  const auto sq = factor_oracle(IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 0, 1});
  CHECK(sq == std::vector<IntPoly>{IntPoly{1, 1}, IntPoly{1, 1}, IntPoly{1, 0, 1}});
  CHECK(factor_oracle(IntPoly{0, 0, 1}) == std::vector<IntPoly>{IntPoly{0, 1}, IntPoly{0, 1}});
  CHECK_THROWS_AS(factor_oracle(IntPoly{1, 2}), InvalidInput);
}

TEST_CASE("squarefree decomposition") {
  const IntPoly a{1, 1}, b{-2, 0, 1};
  const auto parts = squarefree_decomposition(a * b * b * b);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::pair<IntPoly, unsigned>{a, 1});
  CHECK(parts[1] == std::pair<IntPoly, unsigned>{b, 3});
}

TEST_CASE("factor oracle splits random products") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IntPoly> parts;
    int degree = 0;
    while (true) {
      const int d = 1 + static_cast<int>(rng() % 4);
      if (degree + d > kMaxOracleDegree) break;
      parts.push_back(oracle::random_poly(rng, d, 6, true));
      degree += d;
      if (rng() % 3 == 0) break;
    }
    const IntPoly f = product(parts);
    const auto factors = factor_oracle(f);
    CHECK(product(factors) == f);
    CHECK(factors.size() >= parts.size() - std::count_if(parts.begin(), parts.end(), [](const IntPoly& p) { return p.degree() == 0; }));
    for (const auto& g : factors) {
      CHECK(g.is_monic());
      if (g.degree() >= 2) CHECK(factor_oracle(g).size() == 1);
    }
  }
}

TEST_CASE("sound fast path: criteria never contradict the oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 7), 12, true);
    if (f[0] == 0) continue;
    if (criteria_verdict(f).irreducible()) CHECK(factor_oracle(f).size() == 1);
  }
}

TEST_CASE("family dichotomy on a small grid") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (long a = 1; a <= 5; ++a) {
      for (long p : {2, 3, 5, 7, 11, 13}) {
        const FamilyParams fp = FamilyParams::make(n, a, p);
        const auto verdict = irreducibility(build(fp));
        CHECK(verdict.irreducible() == family_irreducible(fp));
        if (!verdict.irreducible()) {
          CHECK(std::count(verdict.witness.begin(), verdict.witness.end(), IntPoly{1, 1}) == 1);
        }
      }
    }
  }
  const auto witness = irreducibility(IntPoly{-3, -2, 1}).witness;
  CHECK(witness == std::vector<IntPoly>{IntPoly{-3, 1}, IntPoly{1, 1}});
}
