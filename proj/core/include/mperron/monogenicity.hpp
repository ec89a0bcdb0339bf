#pragma once

// Monogenicity of monic irreducible polynomials, decided prime by prime.
//
// A prime q divides the index [Z_K : Z[theta]] only if q^2 divides the
// polynomial discriminant, so only those primes are tested. Two local tests
// are available: the five-condition trinomial criterion of Jakhar, Khanduja
// and Sangwan (for x^n + A x^m + B), and Dedekind's criterion for arbitrary
// monic polynomials, which serves as the independent oracle.

#include <optional>
#include <string>
#include <vector>

#include "mperron/integer.hpp"
#include "mperron/poly.hpp"

namespace mperron {

struct TrinomialParams {
  unsigned n = 0;
  unsigned m = 0;
  Integer A;
  Integer B;
  // gcd(m, n) = d0, m = m1 d0, n = n1 d0.
  unsigned d0 = 0;
  unsigned m1 = 0;
  unsigned n1 = 0;

  /// Validates 0 < m < n, A != 0, B != 0 and fills the derived fields.
  static TrinomialParams make(unsigned n, unsigned m, Integer A, Integer B);
  // x^n + A x^m + B as a monic trinomial, if it has that shape.
  static std::optional<TrinomialParams> from_poly(const IntPoly& f);

  IntPoly polynomial() const;
};

struct LocalIndexVerdict {
  enum class Result { NotDividesIndex, DividesIndex, NotApplicable };

  Integer q;
  Result result = Result::NotApplicable;
  // "(i)" .. "(v)", "dedekind", or "dedekind-fallback" when the trinomial
  // criterion's hypotheses do not cover the case.
  std::string condition;
  std::string reason;

  friend bool operator==(const LocalIndexVerdict&, const LocalIndexVerdict&) = default;
};

std::string to_string(LocalIndexVerdict::Result result);

/// Trinomial index test at a prime q dividing the discriminant. Cases are
/// selected by whether q divides A, B and m. When no condition's hypotheses
/// match, Dedekind's criterion answers (tagged "dedekind-fallback") unless
/// `allow_fallback` is false, in which case the result is NotApplicable.
/// Throws InvalidInput if q does not divide the discriminant.
LocalIndexVerdict jks_local_test(const TrinomialParams& t, const Integer& q, bool allow_fallback = true);

/// Dedekind's criterion: with g the radical of f mod q, h = f/g mod q and
/// F = (g h - f)/q for the lifts, q divides the index iff
/// gcd(F, g, h) mod q is nonconstant. f must be monic.
LocalIndexVerdict dedekind_local_test(const IntPoly& f, const Integer& q);

// The quantity B^(n1-m1) n1^n1 - (-1)^m1 A^n1 m1^m1 (m1-n1)^(n1-m1)
// from the q-does-not-divide-ABm case.
Integer jks_condition_v_quantity(const TrinomialParams& t);

enum class IndexMethod { JKS, Dedekind, Both };

IndexMethod parse_index_method(const std::string& text);
std::string to_string(IndexMethod method);

struct MonogenicityReport {
  enum class Verdict { Monogenic, NotMonogenic, Unknown };

  IntPoly poly;
  Integer disc;
  Factorization disc_factors;
  // One entry per tested prime and method, primes increasing.
  std::vector<LocalIndexVerdict> locals;
  Verdict verdict = Verdict::Unknown;
  Integer witness = 0;  // NotMonogenic: a prime dividing the index
  std::string reason;   // Unknown: why
};

std::string to_string(MonogenicityReport::Verdict verdict);

/// Aggregates local tests over every prime q with q^2 | disc(f).
/// Throws InvalidInput if f is not monic, not irreducible, or (for JKS and
/// Both) not a trinomial; throws OracleViolation when JKS and Dedekind
/// disagree under Both.
MonogenicityReport monogenic(const IntPoly& f, IndexMethod method, std::uint64_t rho_budget = kDefaultRhoBudget);

}  // namespace mperron
