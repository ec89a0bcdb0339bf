#include "mperron/classification.hpp"

#include "mperron/errors.hpp"
#include "mperron/irreducibility.hpp"

namespace mperron {
namespace {

constexpr long kLambdaBits = 72;

enum class Tri { No, Yes, Unknown };

// Realness of root i: conj(D_i) meets only D_i -> real; misses D_i -> not real.
Tri is_real(const CertifiedRootSet& set, std::size_t i) {
  const RootDisk& d = set.roots[i];
  const Complex mirror = conj(d.center);
  if (!disks_intersect(mirror, d.radius, d)) return Tri::No;
  for (std::size_t j = 0; j < set.roots.size(); ++j) {
    if (j != i && disks_intersect(mirror, d.radius, set.roots[j])) return Tri::Unknown;
  }
  return Tri::Yes;
}

// |z_i| = 1 via the inversion z -> 1/conj(z), which permutes the roots of a
// self-reciprocal polynomial.
bool provably_on_circle(const CertifiedRootSet& set, std::size_t i) {
  const RootDisk& d = set.roots[i];
  const Real m = abs(d.center);
  if (!(m > d.radius)) return false;
  const Real m2 = m * m;
  const Complex image(d.center.re / m2, d.center.im / m2);
  Real radius = d.radius / (m * (m - d.radius));
  // Room for the rounding of the image center.
  radius += ldexp(abs(image), -static_cast<long>(set.precision_bits) + 4);
  for (std::size_t j = 0; j < set.roots.size(); ++j) {
    if (j != i && disks_intersect(image, radius, set.roots[j])) return false;
  }
  return disks_intersect(image, radius, d);
}

bool small_radii(const CertifiedRootSet& set) {
  for (const auto& d : set.roots) {
    Real scale_bound = abs(d.center);
    if (scale_bound < 1.0) scale_bound = Real(1.0, d.radius.precision());
    if (d.radius > ldexp(scale_bound, -kLambdaBits)) return false;
  }
  return true;
}

ModulusProfile linear_profile(const IntPoly& f) {
  const Integer root = -f[0];
  ModulusProfile p;
  const Integer m = abs(root);
  if (m < 1) ++p.inside;
  else if (m == 1) ++p.on;
  else ++p.outside;
  if (root > 0) ++p.real_positive;
  if (root < 0) ++p.real_negative;
  if (root > 1) p.dominant = 0;
  return p;
}

}  // namespace

std::optional<ModulusProfile> try_modulus_profile(const IntPoly& f, const CertifiedRootSet& set) {
  if (!set.certified) return std::nullopt;
  if (f.degree() == 1) return linear_profile(f);
  const std::size_t n = set.roots.size();
  const bool reciprocal = is_self_reciprocal(f);
  ModulusProfile profile;
  std::vector<Tri> real(n);

  for (std::size_t i = 0; i < n; ++i) {
    const RootDisk& d = set.roots[i];
    if (modulus_upper_bound(d) < 1.0) {
      ++profile.inside;
    } else if (modulus_lower_bound(d) > 1.0) {
      ++profile.outside;
    } else if (reciprocal && provably_on_circle(set, i)) {
      ++profile.on;
    } else {
      return std::nullopt;
    }
    real[i] = is_real(set, i);
    if (real[i] == Tri::Unknown) return std::nullopt;
    if (real[i] == Tri::Yes) {
      if (d.center.re - d.radius > 0.0) ++profile.real_positive;
      else if (d.center.re + d.radius < 0.0) ++profile.real_negative;
      else return std::nullopt;
    }
  }

  if (exponent_stride(f) >= 2) return profile;

  // Without rotational symmetry the maximal modulus is attained either by a
  // single positive real root or only by roots that are not positive reals,
  // so all remaining comparisons are strict and decidable.
  bool every_candidate_excluded = true;
  for (std::size_t i = 0; i < n; ++i) {
    const RootDisk& d = set.roots[i];
    const bool positive_real = real[i] == Tri::Yes && d.center.re - d.radius > 0.0;
    if (!positive_real || !(d.center.re + d.radius > 1.0)) continue;
    const Real lo = modulus_lower_bound(d);
    const Real hi = modulus_upper_bound(d);
    bool dominates = lo > 1.0;
    bool beaten = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!(modulus_upper_bound(set.roots[j]) < lo)) dominates = false;
      if (modulus_lower_bound(set.roots[j]) > hi) beaten = true;
    }
    if (dominates) {
      profile.dominant = i;
      return profile;
    }
    if (!beaten) every_candidate_excluded = false;
  }
  if (every_candidate_excluded) return profile;
  return std::nullopt;
}

ProfiledRoots modulus_profile(const IntPoly& f, const RootOptions& options) {
  ProfiledRoots out;
  out.roots = certified_roots(f, options, [&](const CertifiedRootSet& set) {
    if (!small_radii(set)) return false;
    auto p = try_modulus_profile(f, set);
    if (!p) return false;
    out.profile = *p;
    return true;
  });
  return out;
}

std::string to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::NotIrreducible: return "NotIrreducible";
    case Classification::Kind::NoPerronRoot: return "NoPerronRoot";
    case Classification::Kind::Perron: return "Perron";
  }
  return "NotIrreducible";
}

std::string to_string(Classification::Subclass subclass) {
  switch (subclass) {
    case Classification::Subclass::None: return "None";
    case Classification::Subclass::Pisot: return "Pisot";
    case Classification::Subclass::Salem: return "Salem";
    case Classification::Subclass::AntiPisot: return "AntiPisot";
    case Classification::Subclass::StrictlyPerron: return "StrictlyPerron";
  }
  return "None";
}

std::string Classification::name() const {
  return kind == Kind::Perron ? to_string(subclass) : to_string(kind);
}

Classification classify(const IntPoly& f, const RootOptions& options) {
  if (!f.is_monic()) throw InvalidInput("classify: expects a monic polynomial");
  Classification c;
  c.poly = f;
  if (!is_irreducible(f, options)) return c;

  ProfiledRoots pr = modulus_profile(f, options);
  c.roots = std::move(pr.roots);
  c.profile = pr.profile;
  if (!c.profile.dominant) {
    c.kind = Classification::Kind::NoPerronRoot;
    return c;
  }
  c.kind = Classification::Kind::Perron;
  const std::size_t dom = *c.profile.dominant;
  c.lambda = f.degree() == 1 ? Real(-f[0], 64) : c.roots.roots[dom].center.re;

  const unsigned n = static_cast<unsigned>(f.degree());
  const ModulusProfile& p = c.profile;
  using S = Classification::Subclass;
  if (p.inside == n - 1) {
    c.subclass = S::Pisot;
  } else if (n >= 4 && n % 2 == 0 && is_self_reciprocal(f) && p.inside == 1 && p.on == n - 2 && p.outside == 1) {
    std::size_t inner = 0;
    for (std::size_t i = 0; i < c.roots.roots.size(); ++i) {
      if (modulus_upper_bound(c.roots.roots[i]) < 1.0) inner = i;
    }
    const RootDisk& big = c.roots.roots[dom];
    const RootDisk& small = c.roots.roots[inner];
    const Real product_error = abs(big.center) * small.radius + abs(small.center) * big.radius + big.radius * small.radius +
                               ldexp(Real(1.0, 64), -static_cast<long>(c.roots.precision_bits) + 4);
    const Complex product = big.center * small.center;
    const Real deviation = abs(product - Complex(Real(1.0, 64), Real(64)));
    if (deviation > product_error) {
      throw OracleViolation("Salem candidate " + pretty(f) + " has lambda * lambda' != 1");
    }
    c.subclass = S::Salem;
  } else if (p.inside == 1 && p.outside >= 2) {
    c.subclass = S::AntiPisot;
  } else {
    c.subclass = S::StrictlyPerron;
  }
  return c;
}

}  // namespace mperron
