#include "mperron/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "mperron/errors.hpp"
#include "mperron/irreducibility.hpp"
#include "mperron/matrix.hpp"
#include "mperron/search.hpp"

namespace mperron {
namespace {

using Verdict = MonogenicityReport::Verdict;

struct PointResult {
  std::size_t checks = 0;
  std::size_t unknowns = 0;
  std::vector<VerifyFailure> failures;
};

class Checker {
 public:
  Checker(const FamilyParams& fp, PointResult& out) : fp_(fp), out_(out) {}

  void expect(bool ok, const char* property, const std::string& detail = {}) {
    ++out_.checks;
    if (!ok) out_.failures.push_back({fp_.n, fp_.a, fp_.p, property, detail});
  }

  // Runs a check body, turning library exceptions into failures.
  template <typename F>
  void guarded(const char* property, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, property, e.what());
    }
  }

 private:
  const FamilyParams& fp_;
  PointResult& out_;
};

void check_point(const FamilyParams& fp, const VerifySpec& spec, PointResult& out) {
  Checker check(fp, out);
  const IntPoly f = build(fp);
  const Integer G = G_value(fp);
  const bool irreducible = family_irreducible(fp);

  check.guarded("discriminant-identity", [&] {
    Integer closed = discriminant_closed(fp);
    if (spec.inject_disc_sign_fault) closed = -closed;
    const Integer oracle = discriminant_resultant(f);
    check.expect(closed == oracle, "discriminant-identity", "closed " + closed.get_str() + " vs resultant " + oracle.get_str());
  });

  check.guarded("condition-v-quantity", [&] {
    const Integer d = jks_condition_v_quantity(family_trinomial(fp));
    check.expect(d == -G, "condition-v-quantity", d.get_str() + " != -" + G.get_str());
  });

  check.guarded("reducibility-dichotomy", [&] {
    const bool oracle = factor_oracle(f, spec.certificate.roots).size() == 1;
    check.expect(oracle == irreducible, "reducibility-dichotomy");
  });

  check.guarded("companion-charpoly", [&] {
    const IntMatrix m = companion_matrix(fp.n, fp.a, fp.p);
    check.expect(characteristic_polynomial(m) == f, "companion-charpoly");
    check.expect(matrix_irreducible(m), "companion-irreducible");
    std::seed_seq seed{fp.n, static_cast<unsigned>(fp.a.get_ui()), static_cast<unsigned>(fp.p.get_ui())};
    std::mt19937 rng(seed);
    std::vector<std::size_t> perm(fp.n);
    for (int k = 0; k < 5; ++k) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      check.expect(matrix_irreducible(permute_similar(m, perm)), "permutation-similarity");
    }
  });

  if (!irreducible) return;

  check.guarded("certificate", [&] {
    const Certificate c = strictly_perron_certificate(fp, spec.certificate);
    if (c.G_status == SquarefreeStatus::Kind::Unknown || c.monogenic == Verdict::Unknown) ++out.unknowns;
  });

  std::optional<Verdict> indexed;
  check.guarded("index-tests-agree", [&] {
    indexed = monogenic(f, IndexMethod::Both, spec.certificate.rho_budget).verdict;
  });
  if (fp.coprime() && indexed) {
    check.guarded("monogenic-iff-squarefree", [&] {
      const Verdict closed = family_monogenic(fp, spec.certificate.rho_budget);
      if (closed == Verdict::Unknown || *indexed == Verdict::Unknown) return;
      check.expect(closed == *indexed, "monogenic-iff-squarefree", to_string(closed) + " vs " + to_string(*indexed));
    });
  }

  check.guarded("classification", [&] {
    const Classification cls = classify(f, spec.certificate.roots);
    const ModulusProfile& prof = cls.profile;

    if (fp.coprime() && fp.p > fp.a + 1 && squarefree_status(G, spec.certificate.rho_budget).is_squarefree()) {
      check.expect(cls.subclass == Classification::Subclass::StrictlyPerron && indexed == Verdict::Monogenic,
                   "theorem-grid", cls.name());
    }
    const unsigned negatives = fp.n % 2 == 0 ? 1 : 0;
    check.expect(prof.real_positive == 1 && prof.real_negative == negatives, "real-root-parity",
                 std::to_string(prof.real_positive) + "," + std::to_string(prof.real_negative));

    if (fp.n % 2 == 0 && fp.p > fp.a + 1) {
      bool found = false;
      for (const auto& d : cls.roots.roots) {
        if (d.center.re + d.radius < 0.0 && abs(d.center.im) <= d.radius) {
          found = true;
          check.expect(modulus_lower_bound(d) > 1.0, "negative-root-modulus");
        }
      }
      check.expect(found, "negative-root-modulus", "no negative real root located");
    }
    if (fp.n % 2 == 1 && fp.p == fp.a + 1) {
      check.expect(prof.inside == 0 && prof.on == 0, "odd-n-roots-outside");
    }

    check.expect(cls.lambda.has_value(), "dominant-eigenvalue", "no Perron root");
    if (cls.lambda) {
      const Real pf = dominant_eigenvalue(companion_matrix(fp.n, fp.a, fp.p));
      check.expect(abs(pf - *cls.lambda) < 1e-8, "dominant-eigenvalue", pf.to_string(15) + " vs " + cls.lambda->to_string(15));
    }
    check.expect(vieta_residuals_ok(f, cls.roots), "vieta-residuals");
  });
}

}  // namespace

bool vieta_residuals_ok(const IntPoly& f, const CertifiedRootSet& set) {
  const int n = f.degree();
  if (n < 1 || set.roots.size() != static_cast<std::size_t>(n)) return false;
  const auto prec = static_cast<mpfr_prec_t>(std::max(set.precision_bits, 64u));
  const Real slack_scale = ldexp(Real(1.0, prec), -static_cast<long>(set.precision_bits) + 8);

  Complex sum(prec);
  Real sum_radius(prec);
  Real magnitude_sum(prec);
  Complex product(Real(1.0, prec), Real(prec));
  Real product_hi(1.0, prec);
  Real product_lo(1.0, prec);
  for (const auto& d : set.roots) {
    sum += d.center;
    sum_radius += d.radius;
    magnitude_sum += abs(d.center);
    product = product * d.center;
    product_hi *= abs(d.center) + d.radius;
    product_lo *= abs(d.center);
  }
  // Monic: sum = -a_{n-1}, product = (-1)^n a_0.
  const Real one(1.0, prec);
  const Complex expected_sum(Real(-f[n - 1], prec), Real(prec));
  const Real sum_bound = sum_radius + slack_scale * (magnitude_sum + one) * Real(static_cast<double>(n), prec);
  Integer a0 = f[0];
  if (n % 2 == 1) a0 = -a0;
  const Complex expected_product(Real(a0, prec), Real(prec));
  const Real product_bound = product_hi - product_lo + slack_scale * product_hi * Real(static_cast<double>(n), prec);
  return abs(sum - expected_sum) <= sum_bound && abs(product - expected_product) <= product_bound;
}

VerifyReport run_verify(const VerifySpec& spec) {
  if (spec.n_max < 2) throw InvalidInput("verify: nmax must be at least 2");
  if (spec.a_max < 1) throw InvalidInput("verify: amax must be at least 1");
  if (spec.p_max < 2) throw InvalidInput("verify: pmax must be at least 2");

  std::vector<FamilyParams> points;
  const std::vector<Integer> primes = primes_up_to(spec.p_max);
  for (unsigned n = 2; n <= spec.n_max; ++n) {
    for (Integer a = 1; a <= spec.a_max; ++a) {
      for (const Integer& p : primes) points.push_back(FamilyParams::make(n, a, p));
    }
  }

  std::vector<PointResult> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) check_point(points[i], spec, results[i]);
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  VerifyReport report;
  report.points = points.size();
  for (auto& r : results) {
    report.checks += r.checks;
    report.unknowns += r.unknowns;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace mperron
