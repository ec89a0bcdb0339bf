#pragma once

// Perron / Pisot / Salem / anti-Pisot / strictly-Perron taxonomy from
// certified root disks.
//
// Every decision is made from disk geometry and exact facts about f:
//  - a root is real when the conjugate of its disk meets no other disk;
//  - an irreducible f of degree >= 2 has a root of modulus 1 only if it is
//    self-reciprocal, in which case the image of a disk under z -> 1/conj(z)
//    meeting only that disk proves |z| = 1;
//  - if f(x) = g(x^k) with k >= 2 the roots come in rotated k-tuples, so no
//    root dominates strictly.
// Anything the disks cannot settle escalates precision.

#include <optional>
#include <string>

#include "mperron/poly.hpp"
#include "mperron/roots.hpp"

namespace mperron {

struct ModulusProfile {
  unsigned inside = 0;
  unsigned on = 0;
  unsigned outside = 0;
  unsigned real_positive = 0;
  unsigned real_negative = 0;
  // Index into the root set of the strictly dominant real root > 1.
  std::optional<std::size_t> dominant;

  friend bool operator==(const ModulusProfile&, const ModulusProfile&) = default;
};

/// Profile at the precision of `roots`, or nullopt if some disk is still
/// ambiguous. f must be irreducible and `roots` certified for f.
std::optional<ModulusProfile> try_modulus_profile(const IntPoly& f, const CertifiedRootSet& roots);

struct ProfiledRoots {
  CertifiedRootSet roots;
  ModulusProfile profile;
};

/// Escalates precision until every disk is decided and radii are below
/// 2^-72 relative. Throws PrecisionExhausted otherwise.
ProfiledRoots modulus_profile(const IntPoly& f, const RootOptions& options = {});

struct Classification {
  enum class Kind { NotIrreducible, NoPerronRoot, Perron };
  enum class Subclass { None, Pisot, Salem, AntiPisot, StrictlyPerron };

  Kind kind = Kind::NotIrreducible;
  Subclass subclass = Subclass::None;
  IntPoly poly;
  ModulusProfile profile;
  CertifiedRootSet roots;  // empty for NotIrreducible
  // The dominant root when Perron.
  std::optional<Real> lambda;

  // "Pisot", "Salem", "AntiPisot", "StrictlyPerron", "NoPerronRoot" or
  // "NotIrreducible".
  std::string name() const;
  unsigned precision_bits() const { return roots.precision_bits; }
};

std::string to_string(Classification::Kind kind);
std::string to_string(Classification::Subclass subclass);

/// Throws InvalidInput unless f is monic with 1 <= deg f <= 14, and
/// PrecisionExhausted when disks cannot be decided. OracleViolation if a
/// Salem candidate fails the lambda * lambda' = 1 check.
Classification classify(const IntPoly& f, const RootOptions& options = {});

}  // namespace mperron
