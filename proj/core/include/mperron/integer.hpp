#pragma once

// Unbounded-integer primitives: primality, budgeted factorization,
// squarefree determination and prime valuations. Backed by GMP.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mperron {

using Integer = mpz_class;

inline constexpr std::uint64_t kDefaultRhoBudget = 1'000'000;

// Primes are removed by trial division up to this bound before any
// Pollard-rho work.
inline constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

/// Deterministic primality test.
///
/// Below 3.317e24 (which covers every 64-bit input and then some) strong
/// pseudoprime tests to the first twelve prime bases are a proof. Above that
/// bound a strong Lucas test is added (Baillie-PSW); no counterexample to
/// that combination is known, but it is not a proof.
bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // increasing prime order
  Integer cofactor = 1;             // unfactored remainder
  bool complete = true;             // iff cofactor == 1

  // Product of all prime powers times the cofactor.
  Integer product() const;
  // Exponent of q among the listed primes (0 if absent).
  unsigned exponent_of(const Integer& q) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division to kTrialDivisionBound, then perfect-power detection, then
/// Brent's variant of Pollard rho limited to `rho_budget` iterations in total.
/// Throws InvalidInput for n < 1.
Factorization factorize(const Integer& n, std::uint64_t rho_budget = kDefaultRhoBudget);

struct SquarefreeStatus {
  enum class Kind { Squarefree, NotSquarefree, Unknown };

  Kind kind = Kind::Squarefree;
  // NotSquarefree: a prime q with q^2 | n. Unknown: the unfactored cofactor.
  Integer witness = 0;

  static SquarefreeStatus squarefree() { return {}; }
  static SquarefreeStatus not_squarefree(Integer q) { return {Kind::NotSquarefree, std::move(q)}; }
  static SquarefreeStatus unknown(Integer cofactor) { return {Kind::Unknown, std::move(cofactor)}; }

  bool is_squarefree() const { return kind == Kind::Squarefree; }

  friend bool operator==(const SquarefreeStatus&, const SquarefreeStatus&) = default;
};

std::string to_string(SquarefreeStatus::Kind kind);

/// Squarefree test that avoids full factorization where it can: small primes
/// are stripped with their exponents checked, and a cofactor that is prime,
/// a perfect power, or small enough to hold at most two large primes is
/// decided directly. Throws InvalidInput for n < 1.
SquarefreeStatus squarefree_status(const Integer& n, std::uint64_t rho_budget = kDefaultRhoBudget);

/// Largest j with q^j | n. Throws InvalidInput when n == 0 or q < 2.
unsigned valuation(const Integer& q, const Integer& n);

// Integer power with a machine exponent.
Integer pow(const Integer& base, unsigned long exponent);

// Nonnegative integer k-th root when n is an exact k-th power.
bool exact_root(const Integer& n, unsigned long k, Integer& root);

}  // namespace mperron
