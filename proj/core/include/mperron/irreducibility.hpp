#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mperron/poly.hpp"
#include "mperron/roots.hpp"

namespace mperron {

struct IrreducibilityVerdict {
  enum class Status { Irreducible, Reducible, Inconclusive };

  Status status = Status::Inconclusive;
  // Which test fired: "perron", "perron-equality", "prime-constant",
  // "eisenstein" or "factor-oracle". Empty when inconclusive.
  std::string criterion;
  // Eisenstein prime, 0 otherwise.
  Integer prime = 0;
  // Reducible: irreducible factors whose product is the input.
  std::vector<IntPoly> witness;

  bool irreducible() const { return status == Status::Irreducible; }
};

std::string to_string(IrreducibilityVerdict::Status status);

// |a_{n-1}| > 1 + sum_{i<n-1} |a_i|, or equality with f(1) != 0 and f(-1) != 0.
IrreducibilityVerdict perron_criterion(const IntPoly& f);

// |a_0| prime and |a_0| > 1 + sum_{0<i<n} |a_i|.
IrreducibilityVerdict prime_constant_criterion(const IntPoly& f);

// Searches the prime factors of a_0 for an Eisenstein prime.
IrreducibilityVerdict eisenstein(const IntPoly& f);

// Perron, prime-constant, Eisenstein in that order; first hit wins.
IrreducibilityVerdict criteria_verdict(const IntPoly& f);

inline constexpr int kMaxOracleDegree = 14;

/// Squarefree decomposition of a monic polynomial over Z (Yun): pairs of
/// (squarefree monic factor, multiplicity).
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

/// Exact factorization into monic irreducibles (with multiplicity) for
/// monic f with 1 <= deg f <= kMaxOracleDegree.
///
/// Roots are isolated with certified disks; every subset of at most half the
/// roots whose product polynomial has coefficient intervals containing
/// integers becomes a candidate, confirmed by exact division. Subsets are
/// tried smallest first, so every factor found is irreducible.
/// Throws InvalidInput outside the supported degree range or for non-monic f.
std::vector<IntPoly> factor_oracle(const IntPoly& f, const RootOptions& options = {});

/// Criteria as a fast path, factor_oracle otherwise. Same preconditions.
bool is_irreducible(const IntPoly& f, const RootOptions& options = {});

/// Full verdict: a criterion tag when one fires, else the oracle's answer.
IrreducibilityVerdict irreducibility(const IntPoly& f, const RootOptions& options = {});

}  // namespace mperron
