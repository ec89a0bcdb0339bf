#pragma once

// Certified complex root isolation for squarefree integer polynomials.
//
// Approximations come from Aberth-Ehrlich simultaneous iteration (a double
// precision pass, then polishing in MPFR). Each approximation z_i gets the
// inclusion radius
//
//     r_i = n * |f(z_i)| / (|lc(f)| * prod_{j != i} |z_i - z_j|)
//
// inflated for the rounding error of evaluating f. The union of these disks
// contains every root and a connected group of k disks holds exactly k roots,
// so pairwise disjoint disks isolate the roots one per disk.

#include <functional>
#include <vector>

#include "mperron/poly.hpp"
#include "mperron/real.hpp"

namespace mperron {

struct RootDisk {
  Complex center;
  Real radius;
};

struct CertifiedRootSet {
  std::vector<RootDisk> roots;
  unsigned precision_bits = 0;
  // Every radius finite and all disks pairwise disjoint.
  bool certified = false;
};

struct RootOptions {
  unsigned start_bits = 64;
  // Precision doubles on each escalation.
  unsigned max_escalations = 4;
};

using RootAcceptance = std::function<bool(const CertifiedRootSet&)>;

/// One solve at a fixed working precision. `seed` (same degree) warm-starts
/// the iteration; otherwise a double-precision Aberth pass supplies it.
CertifiedRootSet solve_at_precision(const IntPoly& f, unsigned precision_bits,
                                    const CertifiedRootSet* seed = nullptr);

/// Escalates precision until the disks are certified and `accept` holds.
/// Throws InvalidInput if f is constant or not squarefree, and
/// PrecisionExhausted when the escalation budget runs out.
CertifiedRootSet certified_roots(const IntPoly& f, const RootOptions& options, const RootAcceptance& accept);

/// Certified roots whose radii are below 2^-target_bits * max(1, |z|).
CertifiedRootSet complex_roots(const IntPoly& f, unsigned target_bits = 48, const RootOptions& options = {});

// Interval helpers on disks.
Real modulus_lower_bound(const RootDisk& d);
Real modulus_upper_bound(const RootDisk& d);
bool disks_intersect(const RootDisk& a, const RootDisk& b);
bool disks_intersect(const Complex& center_a, const Real& radius_a, const RootDisk& b);

}  // namespace mperron
