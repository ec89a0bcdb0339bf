// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mperron/classification.hpp"
#include "mperron/errors.hpp"
#include "mperron/family.hpp"
#include "mperron/irreducibility.hpp"
#include "mperron/matrix.hpp"
#include "mperron/monogenicity.hpp"
#include "mperron/search.hpp"
#include "oracles.hpp"

using namespace mperron;
using Verdict = MonogenicityReport::Verdict;
using SqKind = SquarefreeStatus::Kind;

namespace {

constexpr double kEigenTolerance = 1e-8;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string point(unsigned n, long a, long p) {
  return "(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(p) + ")";
}

std::vector<long> primes_below(long bound) {
  std::vector<long> out;
  for (long p = 2; p < bound; ++p) {
    if (oracle::is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  }
  return out;
}

bool coprime(unsigned n, long a) { return std::gcd(static_cast<long>(n), a) == 1; }

// Grid shared by criteria 2, 3 and 5.
template <typename F>
void theorem_grid(F&& visit) {
  for (unsigned n = 2; n <= 9; ++n) {
    for (long a = 1; a <= 6; ++a) {
      if (!coprime(n, a)) continue;
      for (long p : primes_below(300)) {
        if (n % 2 == 0 && p == a + 1) continue;
        visit(n, a, p);
      }
    }
  }
}

Outcome criterion1() {
  Outcome o;
  std::size_t points = 0;
  for (unsigned n = 2; n <= 9; ++n) {
    for (long a = 1; a <= 6; ++a) {
      for (long p : primes_below(50)) {
        const FamilyParams fp = FamilyParams::make(n, a, p);
        const IntPoly f = build(fp);
        const Integer closed = discriminant_closed(fp);
        Integer sylvester = oracle::sylvester_resultant(f, derivative(f));
        if ((n * (n - 1) / 2) % 2 == 1) sylvester = -sylvester;
        if (closed != discriminant_resultant(f) || closed != sylvester) o.fail(point(n, a, p));
        ++points;
      }
    }
  }
  o.detail << points << " points, closed form = subresultant = Sylvester determinant";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t points = 0, unknowns = 0, squarefree = 0;
  theorem_grid([&](unsigned n, long a, long p) {
    const FamilyParams fp = FamilyParams::make(n, a, p);
    const Verdict v = monogenic(build(fp), IndexMethod::JKS).verdict;
    const SqKind s = squarefree_status(G_value(fp)).kind;
    ++points;
    if (v == Verdict::Unknown || s == SqKind::Unknown) {
      ++unknowns;
      return;
    }
    if (s == SqKind::Squarefree) ++squarefree;
    if ((v == Verdict::Monogenic) != (s == SqKind::Squarefree)) o.fail(point(n, a, p));
  });
  if (unknowns != 0) o.fail("unknowns present");
  o.detail << points << " points, " << squarefree << " squarefree G(p), unknowns=" << unknowns;
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t comparisons = 0, divides = 0;
  theorem_grid([&](unsigned n, long a, long p) {
    const FamilyParams fp = FamilyParams::make(n, a, p);
    const IntPoly f = build(fp);
    const TrinomialParams t = family_trinomial(fp);
    for (const auto& [q, e] : factorize(abs(discriminant_resultant(f))).factors) {
      if (e < 2) continue;
      const auto j = jks_local_test(t, q);
      const auto d = dedekind_local_test(f, q);
      ++comparisons;
      if (j.result == LocalIndexVerdict::Result::DividesIndex) ++divides;
      if (j.result != d.result) o.fail(point(n, a, p) + " q=" + q.get_str());
    }
  });
  const TrinomialParams w = TrinomialParams::make(2, 1, -1, -11);
  const bool witness = jks_local_test(w, 3).result == LocalIndexVerdict::Result::DividesIndex &&
                       dedekind_local_test(w.polynomial(), 3).result == LocalIndexVerdict::Result::DividesIndex;
  if (!witness) o.fail("x^2-x-11 at q=3");
  o.detail << comparisons << " local comparisons (" << divides << " DividesIndex), x^2-x-11 at 3 divides both ways";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t points = 0, reducible = 0;
  for (unsigned n = 2; n <= 7; ++n) {
    for (long a = 1; a <= 6; ++a) {
      for (long p : primes_below(100)) {
        const bool split = factor_oracle(build(FamilyParams::make(n, a, p))).size() > 1;
        const bool predicted = n % 2 == 0 && p == a + 1;
        if (split != predicted) o.fail(point(n, a, p));
        reducible += split;
        ++points;
      }
    }
  }
  o.detail << points << " points, " << reducible << " reducible, all with 2|n and p=a+1";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t classified = 0;
  theorem_grid([&](unsigned n, long a, long p) {
    if (p <= a + 1) return;
    const FamilyParams fp = FamilyParams::make(n, a, p);
    if (!oracle::is_squarefree(G_value(fp).get_ui())) return;
    try {
      const Classification c = classify(build(fp));
      if (c.subclass != Classification::Subclass::StrictlyPerron) o.fail(point(n, a, p) + " " + c.name());
    } catch (const PrecisionExhausted&) {
      o.fail(point(n, a, p) + " ambiguous");
    }
    ++classified;
  });
  o.detail << classified << " polynomials classified StrictlyPerron, 0 ambiguous allowed";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const Classification golden = classify(IntPoly{-1, -1, 1});
  if (golden.name() != "Pisot") o.fail("x^2-x-1 " + golden.name());

  const Classification lehmer = classify(IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  const double lambda = lehmer.lambda ? lehmer.lambda->to_double() : 0.0;
  if (lehmer.name() != "Salem" || !(lambda > 1.17627 && lambda < 1.17629)) o.fail("Lehmer");

  const IntPoly eleven{-11, -1, 1};
  if (classify(eleven).name() != "StrictlyPerron" || monogenic(eleven, IndexMethod::Both).verdict != Verdict::NotMonogenic) {
    o.fail("x^2-x-11");
  }
  const IntPoly three{-3, -1, 1};
  if (classify(three).name() != "StrictlyPerron" || monogenic(three, IndexMethod::Both).verdict != Verdict::Monogenic) {
    o.fail("x^2-x-3");
  }
  o.detail << "Lehmer lambda=" << (lehmer.lambda ? lehmer.lambda->to_string(12) : "none") << " in (1.17627, 1.17629)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937 rng(20260131);
  std::size_t points = 0, permuted = 0;
  double worst = 0.0;
  for (unsigned n = 2; n <= 9; ++n) {
    for (long a = 1; a <= 6; ++a) {
      for (long p : primes_below(300)) {
        const FamilyParams fp = FamilyParams::make(n, a, p);
        const IntPoly f = build(fp);
        const IntMatrix m = companion_matrix(n, a, p);
        ++points;
        if (characteristic_polynomial(m) != f) o.fail(point(n, a, p) + " charpoly");
        if (!matrix_irreducible(m)) o.fail(point(n, a, p) + " digraph");
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int k = 0; k < 5; ++k) {
          std::shuffle(perm.begin(), perm.end(), rng);
          if (!matrix_irreducible(permute_similar(m, perm))) o.fail(point(n, a, p) + " permuted");
          ++permuted;
        }
        if (!family_irreducible(fp)) continue;
        const Classification c = classify(f);
        if (!c.lambda) {
          o.fail(point(n, a, p) + " no dominant root");
          continue;
        }
        const double diff = std::fabs((dominant_eigenvalue(m) - *c.lambda).to_double());
        worst = std::max(worst, diff);
        if (!(diff <= kEigenTolerance)) o.fail(point(n, a, p) + " eigenvalue");
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu points, %zu permuted copies, max |power - solver| = %.2e (tol %.0e)", points,
                permuted, worst, kEigenTolerance);
  o.detail << buf;
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t points = 0, negative_checked = 0, odd_checked = 0;
  for (unsigned n = 2; n <= 9; ++n) {
    for (long a = 1; a <= 6; ++a) {
      for (long p : primes_below(300)) {
        const FamilyParams fp = FamilyParams::make(n, a, p);
        if (!family_irreducible(fp)) continue;
        ++points;
        const RealRootCounts expected{1, n % 2 == 0 ? 1u : 0u};
        if (descartes_profile(fp) != expected) o.fail(point(n, a, p) + " counts");
        const ProfiledRoots pr = modulus_profile(build(fp));
        if (n % 2 == 0 && p > a + 1) {
          ++negative_checked;
          bool found = false;
          for (const auto& d : pr.roots.roots) {
            const bool maybe_real = abs(d.center.im) <= d.radius;
            if (maybe_real && d.center.re < 0.0) found = modulus_lower_bound(d) > 1.0;
          }
          // f(-1) = 1 + a - p < 0 and f -> +inf as x -> -inf.
          const bool sign_change = evaluate(build(fp), Integer(-1)) < 0;
          if (!found || !sign_change || pr.profile.real_negative != 1) o.fail(point(n, a, p) + " negative root");
        }
        if (n % 2 == 1 && p == a + 1) {
          ++odd_checked;
          for (const auto& d : pr.roots.roots) {
            if (!(modulus_lower_bound(d) > 1.0)) o.fail(point(n, a, p) + " root inside");
          }
        }
      }
    }
  }
  o.detail << points << " irreducible points, " << negative_checked << " negative roots |x|>1, " << odd_checked
           << " odd-n p=a+1 cases all roots |x|>1";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t squarefree = 0;
  for (std::uint64_t N = 1; N <= 1'000'000; ++N) {
    const SquarefreeStatus s = squarefree_status(Integer(static_cast<unsigned long>(N)));
    const bool expected = oracle::is_squarefree(N);
    if (s.kind == SqKind::Unknown || s.is_squarefree() != expected) o.fail("N=" + std::to_string(N));
    if (s.kind == SqKind::NotSquarefree && N % (s.witness.get_ui() * s.witness.get_ui()) != 0) {
      o.fail("witness N=" + std::to_string(N));
    }
    squarefree += expected;
  }
  std::size_t quantities = 0;
  for (unsigned n = 2; n <= 9; ++n) {
    for (long a = 1; a <= 6; ++a) {
      for (long p : primes_below(300)) {
        const FamilyParams fp = FamilyParams::make(n, a, p);
        if (jks_condition_v_quantity(family_trinomial(fp)) != -G_value(fp)) o.fail(point(n, a, p) + " (v)");
        ++quantities;
      }
    }
  }
  o.detail << "N<=10^6: " << squarefree << " squarefree, all agree; condition-(v) quantity = -G(p) at " << quantities
           << " points";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::pair<unsigned, long>> pairs{{2, 1}, {3, 1}, {3, 2}, {4, 3}, {5, 2}};
  for (auto [n, a] : pairs) {
    SearchSpec spec;
    spec.n_min = spec.n_max = n;
    spec.a_min = spec.a_max = a;
    spec.p_max = 2000;
    std::size_t found = 0;
    run_search(spec, [&](const Certificate& c) {
      if (c.irreducible && c.G_status == SqKind::Squarefree) ++found;
    });
    std::size_t direct = 0;
    for (long p : primes_below(2001)) {
      if (n % 2 == 0 && p == a + 1) continue;
      const long g = static_cast<long>(std::pow(n, n)) * p + static_cast<long>(std::pow(a, n) * std::pow(n - 1, n - 1));
      direct += oracle::is_squarefree(static_cast<std::uint64_t>(g));
    }
    if (found < 10 || found != direct) o.fail("(" + std::to_string(n) + "," + std::to_string(a) + ")");
    o.detail << "(" << n << "," << a << "):" << found << " ";
  }
  o.detail << "squarefree G(p), p<=2000, matching direct count";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"discriminant identity", criterion1},
      {"monogenic iff G(p) squarefree", criterion2},
      {"trinomial index test agrees with Dedekind", criterion3},
      {"reducibility dichotomy", criterion4},
      {"strictly-Perron classification", criterion5},
      {"known-example corpus", criterion6},
      {"companion matrix and Perron-Frobenius checks", criterion7},
      {"real-root profile", criterion8},
      {"squarefree engine and condition-(v) quantity", criterion9},
      {"search smoke test", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s  %s: %s [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.str().c_str(), seconds);
    for (const auto& f : o.failures) std::printf("              failure %s\n", f.c_str());
    failed += !o.pass;
  }
  std::printf("acceptance: %zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
