#pragma once

// Grid verification of every invariant the library promises for the family.

#include <string>
#include <vector>

#include "mperron/family.hpp"

namespace mperron {

struct VerifySpec {
  unsigned n_max = 8;
  Integer a_max = 6;
  Integer p_max = 300;  // inclusive
  CertificateOptions certificate;
  unsigned threads = 0;
  // Test hook: negates the closed-form discriminant so the harness must fail.
  bool inject_disc_sign_fault = false;
};

struct VerifyFailure {
  unsigned n = 0;
  Integer a;
  Integer p;
  std::string property;
  std::string detail;
};

struct VerifyReport {
  std::size_t points = 0;
  std::size_t checks = 0;
  std::size_t unknowns = 0;
  std::vector<VerifyFailure> failures;  // ordered by (n, a, p)

  bool passed() const { return failures.empty(); }
};

/// Checks at every (n, a, p) with 2 <= n <= n_max, 1 <= a <= a_max and prime
/// p <= p_max:
///   discriminant-identity, condition-v-quantity, reducibility-dichotomy,
///   companion-charpoly, companion-irreducible, permutation-similarity,
/// and for irreducible f also
///   certificate (the full pipeline), index-tests-agree,
///   monogenic-iff-squarefree, theorem-grid, real-root-parity,
///   negative-root-modulus, odd-n-roots-outside, dominant-eigenvalue,
///   vieta-residuals.
/// Throws InvalidInput for n_max < 2, a_max < 1 or p_max < 2.
VerifyReport run_verify(const VerifySpec& spec);

/// Sum and product of the certified roots agree with -a_{n-1} and
/// (-1)^n a_0 within the disk radii (plus rounding slack).
bool vieta_residuals_ok(const IntPoly& f, const CertifiedRootSet& roots);

}  // namespace mperron
