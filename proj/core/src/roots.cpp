#include "mperron/roots.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "mperron/errors.hpp"

namespace mperron {
namespace {

using cd = std::complex<double>;

std::vector<cd> aberth_double(const IntPoly& f) {
  const int n = f.degree();
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    a[k] = f[k].get_d();
    if (!std::isfinite(a[k])) return {};
  }

  double bound = 0.0;
  for (int k = 1; k <= n; ++k) {
    double t = std::pow(std::abs(a[n - k] / a[n]), 1.0 / k);
    if (k == n) t = std::pow(std::abs(a[0] / (2.0 * a[n])), 1.0 / n);
    bound = std::max(bound, t);
  }
  bound = 2.0 * bound;
  if (!(bound > 0.0) || !std::isfinite(bound)) bound = 1.0;

  std::vector<cd> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(bound, theta);
  }

  for (int iter = 0; iter < 800; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      cd p = a[n];
      cd dp = 0.0;
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * z[i] + p;
        p = p * z[i] + a[k];
      }
      if (p == 0.0) continue;
      const cd ratio = p / dp;
      cd s = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) s += 1.0 / (z[i] - z[j]);
      }
      const cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return {};
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(std::abs(z[i]), 1e-300));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

struct Evaluation {
  Complex value;
  Complex derivative;
};

Evaluation horner(const std::vector<Real>& coeffs, const Complex& z) {
  const mpfr_prec_t prec = z.precision();
  const std::size_t n = coeffs.size() - 1;
  Complex p(coeffs[n], Real(prec));
  Complex dp(prec);
  for (std::size_t k = n; k-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += coeffs[k];
  }
  return {std::move(p), std::move(dp)};
}

Real magnitude_sum(const std::vector<Real>& coeffs, const Real& modulus) {
  const std::size_t n = coeffs.size() - 1;
  Real acc = abs(coeffs[n]);
  for (std::size_t k = n; k-- > 0;) acc = acc * modulus + abs(coeffs[k]);
  return acc;
}

unsigned bit_length(unsigned v) {
  unsigned b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

Real infinity(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_inf(r.get(), 1);
  return r;
}

}  // namespace

Real modulus_lower_bound(const RootDisk& d) {
  Real lo = abs(d.center) - d.radius;
  if (lo < 0.0) return Real(d.radius.precision());
  return lo;
}

Real modulus_upper_bound(const RootDisk& d) { return abs(d.center) + d.radius; }

bool disks_intersect(const Complex& center_a, const Real& radius_a, const RootDisk& b) {
  return abs(center_a - b.center) <= radius_a + b.radius;
}

bool disks_intersect(const RootDisk& a, const RootDisk& b) { return disks_intersect(a.center, a.radius, b); }

CertifiedRootSet solve_at_precision(const IntPoly& f, unsigned precision_bits, const CertifiedRootSet* seed) {
  const int n = f.degree();
  if (n < 1) throw InvalidInput("root solving needs a polynomial of degree at least 1");
  const auto prec = static_cast<mpfr_prec_t>(precision_bits);

  std::vector<Real> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coeffs.emplace_back(f[k], prec);

  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(n));
  if (seed != nullptr && seed->roots.size() == static_cast<std::size_t>(n)) {
    for (const auto& d : seed->roots) {
      Complex c(d.center);
      c.re.set_precision(prec);
      c.im.set_precision(prec);
      z.push_back(std::move(c));
    }
  } else if (n == 1) {
    z.emplace_back(-Real(f[0], prec) / Real(f[1], prec), Real(prec));
  } else {
    std::vector<cd> start = aberth_double(f);
    if (start.empty()) {
      for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
        start.push_back(std::polar(1.0, theta));
      }
    }
    for (const auto& s : start) z.emplace_back(Real(s.real(), prec), Real(s.imag(), prec));
  }

  // Coincident starting points make the Aberth correction undefined, and a
  // configuration symmetric about a real axis line can stay on it forever.
  // A small generic offset breaks both.
  for (int i = 0; i < n && n > 1; ++i) {
    Real scale = abs(z[i]);
    if (scale < 1.0) scale = Real(1.0, prec);
    const double theta = 2.399963229728653 * (i + 1) + 0.7;
    const Real offset = ldexp(scale, -static_cast<long>(precision_bits) / 2);
    z[i].re += offset * Real(std::cos(theta), prec);
    z[i].im += offset * Real(std::sin(theta), prec);
  }

  // Aberth polishing at working precision.
  const Real tolerance = ldexp(Real(1.0, prec), -static_cast<long>(precision_bits) + 8);
  const Real one(1.0, prec);
  const int max_iterations = 400 + 20 * n;
  for (int iter = 0; iter < max_iterations && n > 1; ++iter) {
    Real worst(prec);
    for (int i = 0; i < n; ++i) {
      Evaluation e = horner(coeffs, z[i]);
      if (mpfr_zero_p(e.value.re.get()) && mpfr_zero_p(e.value.im.get())) continue;
      if (mpfr_zero_p(e.derivative.re.get()) && mpfr_zero_p(e.derivative.im.get())) {
        // Nudge off a critical point.
        z[i].re += ldexp(one, -static_cast<long>(precision_bits) / 4);
        continue;
      }
      const Complex ratio = e.value / e.derivative;
      Complex s(prec);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const Complex diff = z[i] - z[j];
        s += Complex(one, Real(prec)) / diff;
      }
      const Complex w = ratio / (Complex(one, Real(prec)) - ratio * s);
      if (!mpfr_number_p(w.re.get()) || !mpfr_number_p(w.im.get())) continue;
      z[i] -= w;
      Real mag = abs(z[i]);
      if (mag < 1.0) mag = one;
      const Real rel = abs(w) / mag;
      if (rel > worst) worst = rel;
    }
    if (worst <= tolerance) break;
  }

  CertifiedRootSet out;
  out.precision_bits = precision_bits;
  out.roots.reserve(static_cast<std::size_t>(n));

  // Rounding allowance: evaluation error of Horner in complex arithmetic and
  // relative error in the product of differences.
  const Real eval_factor = ldexp(Real(8.0 * n + 8.0, prec), -static_cast<long>(precision_bits));
  const Real inflate = one + ldexp(one, -static_cast<long>(precision_bits) + 2 * static_cast<long>(bit_length(n)) + 10);
  const Real lead = abs(coeffs[static_cast<std::size_t>(n)]);
  const Real degree(static_cast<double>(n), prec);

  bool finite = true;
  for (int i = 0; i < n; ++i) {
    Evaluation e = horner(coeffs, z[i]);
    Real numerator = abs(e.value) + eval_factor * magnitude_sum(coeffs, abs(z[i]));
    Real denominator = lead;
    for (int j = 0; j < n; ++j) {
      if (j != i) denominator *= abs(z[i] - z[j]);
    }
    Real radius = mpfr_zero_p(denominator.get()) ? infinity(prec) : degree * numerator / denominator * inflate;
    if (!mpfr_number_p(radius.get())) finite = false;
    out.roots.push_back({z[i], std::move(radius)});
  }

  bool disjoint = finite;
  for (int i = 0; i < n && disjoint; ++i) {
    for (int j = i + 1; j < n && disjoint; ++j) {
      if (disks_intersect(out.roots[i], out.roots[j])) disjoint = false;
    }
  }
  out.certified = disjoint;
  return out;
}

CertifiedRootSet certified_roots(const IntPoly& f, const RootOptions& options, const RootAcceptance& accept) {
  if (f.degree() < 1) throw InvalidInput("root solving needs a polynomial of degree at least 1");
  if (gcd(f, derivative(f)).degree() > 0) throw InvalidInput("polynomial is not squarefree: " + pretty(f));

  unsigned bits = std::max(options.start_bits, 32u);
  CertifiedRootSet previous;
  bool have_previous = false;
  for (unsigned attempt = 0; attempt <= options.max_escalations; ++attempt) {
    CertifiedRootSet set = solve_at_precision(f, bits, have_previous ? &previous : nullptr);
    if (set.certified && (!accept || accept(set))) return set;
    previous = std::move(set);
    have_previous = true;
    bits *= 2;
  }
  throw PrecisionExhausted("root disks could not be certified for " + pretty(f) + " up to " +
                           std::to_string(bits / 2) + " bits");
}

CertifiedRootSet complex_roots(const IntPoly& f, unsigned target_bits, const RootOptions& options) {
  return certified_roots(f, options, [target_bits](const CertifiedRootSet& set) {
    for (const auto& d : set.roots) {
      Real scale_bound = abs(d.center);
      if (scale_bound < 1.0) scale_bound = Real(1.0, d.radius.precision());
      if (d.radius > ldexp(scale_bound, -static_cast<long>(target_bits))) return false;
    }
    return true;
  });
}

}  // namespace mperron
