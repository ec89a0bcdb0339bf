#include "mperron/irreducibility.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "mperron/errors.hpp"

namespace mperron {
namespace {

using IVS = IrreducibilityVerdict::Status;

IrreducibilityVerdict irreducible_by(std::string criterion, Integer prime = 0) {
  IrreducibilityVerdict v;
  v.status = IVS::Irreducible;
  v.criterion = std::move(criterion);
  v.prime = std::move(prime);
  return v;
}

void require_monic_degree2(const IntPoly& f, const char* who) {
  if (!f.is_monic() || f.degree() < 2) throw InvalidInput(std::string(who) + ": expects a monic polynomial of degree >= 2");
}

using cld = std::complex<long double>;

struct SubsetScan {
  std::vector<cld> centers;
  std::vector<long double> magnitudes;  // |z_i|
  std::vector<long double> inflated;    // |z_i| + r_i
};

// Elementary symmetric functions e_0..e_k of the values.
template <typename T>
std::vector<T> elementary(const std::vector<T>& values) {
  std::vector<T> e(values.size() + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j-- > 0;) e[j + 1] += e[j] * values[i];
  }
  return e;
}

// Coefficient error bound for products of subsets, using all roots: the bound
// is monotone in adding roots, so the full set dominates every subset.
long double worst_subset_error(const SubsetScan& scan) {
  const auto hi = elementary(scan.inflated);
  const auto lo = elementary(scan.magnitudes);
  long double worst = 0;
  for (std::size_t j = 1; j < hi.size(); ++j) worst = std::max(worst, hi[j] - lo[j] + hi[j] * 0x1p-50L);
  return worst;
}

SubsetScan make_scan(const CertifiedRootSet& set) {
  SubsetScan scan;
  for (const auto& d : set.roots) {
    const long double re = mpfr_get_ld(d.center.re.get(), MPFR_RNDN);
    const long double im = mpfr_get_ld(d.center.im.get(), MPFR_RNDN);
    const long double mag = std::hypot(re, im);
    // Conversion to long double moves each center by at most ~|z| 2^-63.
    const long double r = mpfr_get_ld(d.radius.get(), MPFR_RNDU) + mag * 0x1p-60L;
    scan.centers.emplace_back(re, im);
    scan.magnitudes.push_back(mag);
    scan.inflated.push_back(mag + r);
  }
  return scan;
}

// Integer monic polynomial matching prod_{i in subset}(x - z_i) within
// rigorous coefficient bounds, if one exists.
std::optional<IntPoly> candidate_factor(const SubsetScan& scan, const std::vector<std::size_t>& subset) {
  const std::size_t k = subset.size();
  std::vector<cld> poly(k + 1, cld(0));
  poly[0] = cld(1);
  std::vector<long double> mags, infl;
  for (std::size_t idx : subset) {
    const cld z = scan.centers[idx];
    for (std::size_t j = k; j > 0; --j) poly[j] = poly[j] - z * poly[j - 1];
    mags.push_back(scan.magnitudes[idx]);
    infl.push_back(scan.inflated[idx]);
  }
  // poly[j] is the coefficient of x^(k-j), i.e. (-1)^j e_j.
  const auto hi = elementary(infl);
  const auto lo = elementary(mags);
  std::vector<Integer> ascending(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    const long double err = hi[j] - lo[j] + hi[j] * 0x1p-50L;
    if (std::fabs(poly[j].imag()) > err) return std::nullopt;
    const long double nearest = std::nearbyint(poly[j].real());
    if (std::fabs(poly[j].real() - nearest) > err) return std::nullopt;
    Real exact(64);
    mpfr_set_ld(exact.get(), nearest, MPFR_RNDN);
    Integer c;
    mpfr_get_z(c.get_mpz_t(), exact.get(), MPFR_RNDN);
    ascending[k - j] = std::move(c);
  }
  return IntPoly(std::move(ascending));
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<IntPoly> split_squarefree(const IntPoly& g, const RootOptions& options) {
  if (g.degree() <= 1) return {g};

  SubsetScan scan;
  certified_roots(g, options, [&](const CertifiedRootSet& set) {
    scan = make_scan(set);
    return worst_subset_error(scan) < 0.25L;
  });

  std::vector<IntPoly> factors;
  IntPoly current = g;
  std::vector<std::size_t> remaining(scan.centers.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  for (std::size_t k = 1; 2 * k <= remaining.size(); ++k) {
    bool found = true;
    while (found && 2 * k <= remaining.size()) {
      found = false;
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      do {
        std::vector<std::size_t> subset(k);
        for (std::size_t i = 0; i < k; ++i) subset[i] = remaining[pick[i]];
        auto h = candidate_factor(scan, subset);
        if (!h) continue;
        auto quotient = try_divide_exact(current, *h);
        if (!quotient) continue;
        factors.push_back(*std::move(h));
        current = *std::move(quotient);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0, p = 0; i < remaining.size(); ++i) {
          if (p < k && pick[p] == i) {
            ++p;
            continue;
          }
          keep.push_back(remaining[i]);
        }
        remaining = std::move(keep);
        found = true;
        break;
      } while (next_combination(pick, remaining.size()));
    }
  }
  if (current.degree() > 0) factors.push_back(std::move(current));
  return factors;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(), b.coefficients().begin(),
                                      b.coefficients().end());
}

}  // namespace

std::string to_string(IrreducibilityVerdict::Status status) {
  switch (status) {
    case IVS::Irreducible: return "Irreducible";
    case IVS::Reducible: return "Reducible";
    case IVS::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

IrreducibilityVerdict perron_criterion(const IntPoly& f) {
  require_monic_degree2(f, "perron_criterion");
  const int n = f.degree();
  Integer rest = 1;
  for (int i = 0; i < n - 1; ++i) rest += abs(f[i]);
  const Integer top = abs(f[n - 1]);
  if (top > rest) return irreducible_by("perron");
  if (top == rest && evaluate(f, 1) != 0 && evaluate(f, -1) != 0) return irreducible_by("perron-equality");
  return {};
}

IrreducibilityVerdict prime_constant_criterion(const IntPoly& f) {
  require_monic_degree2(f, "prime_constant_criterion");
  const Integer a0 = abs(f[0]);
  Integer rest = 1;
  for (int i = 1; i < f.degree(); ++i) rest += abs(f[i]);
  if (a0 > rest && is_prime(a0)) return irreducible_by("prime-constant");
  return {};
}

IrreducibilityVerdict eisenstein(const IntPoly& f) {
  if (!f.is_monic()) throw InvalidInput("eisenstein: expects a monic polynomial");
  if (f.degree() < 1 || f[0] == 0) return {};
  // Candidates divide every non-leading coefficient.
  Integer common = abs(f[0]);
  for (int i = 1; i < f.degree(); ++i) mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), f[i].get_mpz_t());
  if (common == 1) return {};
  const Factorization fac = factorize(common);
  for (const auto& [q, e] : fac.factors) {
    if (!mpz_divisible_p(f[0].get_mpz_t(), Integer(q * q).get_mpz_t())) return irreducible_by("eisenstein", q);
  }
  return {};
}

IrreducibilityVerdict criteria_verdict(const IntPoly& f) {
  if (auto v = perron_criterion(f); v.irreducible()) return v;
  if (auto v = prime_constant_criterion(f); v.irreducible()) return v;
  return eisenstein(f);
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
  if (!f.is_monic()) throw InvalidInput("squarefree_decomposition: expects a monic polynomial");
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  const IntPoly df = derivative(f);
  const IntPoly a0 = gcd(f, df);
  if (a0.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPoly b = divide_exact(f, a0);
  IntPoly c = divide_exact(df, a0);
  IntPoly d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const IntPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - derivative(b);
  }
  return out;
}

std::vector<IntPoly> factor_oracle(const IntPoly& f, const RootOptions& options) {
  if (!f.is_monic()) throw InvalidInput("factor_oracle: expects a monic polynomial");
  if (f.degree() < 1 || f.degree() > kMaxOracleDegree) {
    throw InvalidInput("factor_oracle: degree must be between 1 and " + std::to_string(kMaxOracleDegree));
  }
  std::vector<IntPoly> out;
  for (const auto& [part, multiplicity] : squarefree_decomposition(f)) {
    for (const IntPoly& factor : split_squarefree(part, options)) {
      for (unsigned m = 0; m < multiplicity; ++m) out.push_back(factor);
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

bool is_irreducible(const IntPoly& f, const RootOptions& options) { return irreducibility(f, options).irreducible(); }

IrreducibilityVerdict irreducibility(const IntPoly& f, const RootOptions& options) {
  if (!f.is_monic()) throw InvalidInput("irreducibility: expects a monic polynomial");
  if (f.degree() < 1 || f.degree() > kMaxOracleDegree) {
    throw InvalidInput("irreducibility: degree must be between 1 and " + std::to_string(kMaxOracleDegree));
  }
  if (f.degree() == 1) return irreducible_by("linear");
  if (f[0] != 0) {
    if (auto v = criteria_verdict(f); v.irreducible()) return v;
  }
  std::vector<IntPoly> factors = factor_oracle(f, options);
  if (factors.size() == 1) return irreducible_by("factor-oracle");
  IrreducibilityVerdict v;
  v.status = IVS::Reducible;
  v.criterion = "factor-oracle";
  v.witness = std::move(factors);
  return v;
}

}  // namespace mperron
