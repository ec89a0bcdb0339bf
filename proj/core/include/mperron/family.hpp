#pragma once

// The trinomials f(x) = x^n - a x^(n-1) - p with p prime: closed forms, the
// reducibility dichotomy, monogenicity through G(p) and the end-to-end
// certificate that cross-checks every closed form against its oracle.

#include <optional>
#include <string>
#include <utility>

#include "mperron/classification.hpp"
#include "mperron/integer.hpp"
#include "mperron/monogenicity.hpp"
#include "mperron/poly.hpp"

namespace mperron {

struct FamilyParams {
  unsigned n = 2;
  Integer a = 1;
  Integer p = 2;

  /// Throws InvalidInput unless n >= 2, a >= 1 and p is prime.
  static FamilyParams make(unsigned n, const Integer& a, const Integer& p);
  bool coprime() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

IntPoly build(const FamilyParams& fp);

// n^n p + a^n (n-1)^(n-1).
Integer G_value(const FamilyParams& fp);

// (-1)^((n-1)(n+2)/2) p^(n-2) G(p).
Integer discriminant_closed(const FamilyParams& fp);

// False exactly when n is even and p = a + 1; then x = -1 is a root.
bool family_irreducible(const FamilyParams& fp);

// Parameters of f as a trinomial x^n + A x^m + B.
TrinomialParams family_trinomial(const FamilyParams& fp);

/// Monogenic iff G(p) is squarefree; Unknown when squarefreeness is
/// undecided within the budget. Throws InvalidInput for the reducible case or
/// gcd(a, n) != 1.
MonogenicityReport::Verdict family_monogenic(const FamilyParams& fp, std::uint64_t rho_budget = kDefaultRhoBudget);

struct RealRootCounts {
  unsigned positive = 0;
  unsigned negative = 0;
  friend bool operator==(const RealRootCounts&, const RealRootCounts&) = default;
};

/// Certified counts of positive and negative real roots. Throws InvalidInput
/// in the reducible case.
RealRootCounts descartes_profile(const FamilyParams& fp, const RootOptions& options = {});

struct Certificate {
  unsigned n = 0;
  Integer a;
  Integer p;
  IntPoly poly;
  Integer disc;
  Integer G;
  SquarefreeStatus::Kind G_status = SquarefreeStatus::Kind::Unknown;
  bool irreducible = false;
  std::optional<MonogenicityReport::Verdict> monogenic;  // absent when reducible
  std::string class_name;
  std::optional<std::string> lambda;  // decimal, absent without a Perron root
  bool theorem_applicable = false;
  std::string conclusion;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertificateOptions {
  std::uint64_t rho_budget = kDefaultRhoBudget;
  RootOptions roots;
};

// Significant digits of lambda in certificates.
inline constexpr int kLambdaDigits = 20;

/// Runs the whole pipeline eagerly: closed-form and resultant discriminants,
/// G(p) and its squarefree status, the reducibility dichotomy against the
/// factor oracle, both index tests, classification, the companion matrix
/// (characteristic polynomial, strong connectivity, power-iteration Perron
/// root against the solver) and the real-root parity rule. Any disagreement,
/// or a theorem-applicable case with squarefree G(p) that is not a monogenic
/// strictly-Perron polynomial, throws OracleViolation.
Certificate strictly_perron_certificate(const FamilyParams& fp, const CertificateOptions& options = {});

// Combines a class name and monogenicity verdict into the conclusion line.
std::string conclusion_text(bool irreducible, const std::string& class_name,
                            std::optional<MonogenicityReport::Verdict> monogenic);

}  // namespace mperron
