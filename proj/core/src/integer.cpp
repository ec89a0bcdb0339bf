#include "mperron/integer.hpp"

#include <algorithm>
#include <map>

#include "mperron/errors.hpp"

namespace mperron {
namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(const Integer& n, unsigned long a) {
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  Integer x;
  Integer base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

Integer mod_nonneg(const Integer& v, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer half_mod(Integer v, const Integer& n) {
  if (mpz_odd_p(v.get_mpz_t())) v += n;
  mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
  return mod_nonneg(v, n);
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
// n odd, not a perfect square, no tiny factors.
bool strong_lucas_probable_prime(const Integer& n) {
  long d_param = 5;
  for (;;) {
    Integer dz = d_param;
    int j = mpz_jacobi(dz.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dz) != n) return false;
    d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
  }
  const Integer D = d_param;
  const Integer P = 1;
  const Integer Q = (1 - D) / 4;

  Integer d = n + 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  Integer U = 1;
  Integer V = P;
  Integer Qk = mod_nonneg(Q, n);
  const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    U = mod_nonneg(U * V, n);
    V = mod_nonneg(V * V - 2 * Qk, n);
    Qk = mod_nonneg(Qk * Qk, n);
    if (mpz_tstbit(d.get_mpz_t(), i)) {
      Integer u_next = half_mod(P * U + V, n);
      Integer v_next = half_mod(D * U + P * V, n);
      U = std::move(u_next);
      V = std::move(v_next);
      Qk = mod_nonneg(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = mod_nonneg(V * V - 2 * Qk, n);
    if (V == 0) return true;
    Qk = mod_nonneg(Qk * Qk, n);
  }
  return false;
}

struct FactorAccumulator {
  std::map<Integer, unsigned> primes;
  Integer cofactor = 1;
  std::uint64_t budget = 0;

  void add(const Integer& p, unsigned e) { primes[p] += e; }
};

// Brent's cycle-finding Pollard rho. Returns a nontrivial factor or 0 when
// the budget runs out.
Integer brent_rho(const Integer& n, std::uint64_t& budget) {
  constexpr unsigned kBatch = 128;
  for (unsigned long c = 1; budget > 0; ++c) {
    Integer y = 2;
    Integer x;
    Integer ys;
    Integer g = 1;
    Integer q = 1;
    std::uint64_t r = 1;
    auto step = [&](const Integer& v) { return mod_nonneg(v * v + c, n); };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      budget = budget > r ? budget - r : 0;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t m = std::min<std::uint64_t>(kBatch, r - k);
        for (std::uint64_t i = 0; i < m; ++i) {
          y = step(y);
          q = mod_nonneg(q * abs(x - y), n);
        }
        budget = budget > m ? budget - m : 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot; backtrack one step at a time.
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

// Largest k >= 2 with n = r^k, or 1 if n is not a perfect power.
unsigned long perfect_power_exponent(const Integer& n, Integer& root) {
  if (n < 4 || !mpz_perfect_power_p(n.get_mpz_t())) return 1;
  const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    if (exact_root(n, k, root)) return k;
  }
  return 1;
}

void split_large(const Integer& m, unsigned multiplicity, FactorAccumulator& acc) {
  if (m == 1) return;
  if (is_prime(m)) {
    acc.add(m, multiplicity);
    return;
  }
  Integer root;
  if (unsigned long k = perfect_power_exponent(m, root); k > 1) {
    split_large(root, multiplicity * static_cast<unsigned>(k), acc);
    return;
  }
  Integer d = brent_rho(m, acc.budget);
  if (d == 0) {
    Integer leftover;
    mpz_pow_ui(leftover.get_mpz_t(), m.get_mpz_t(), multiplicity);
    acc.cofactor *= leftover;
    return;
  }
  split_large(d, multiplicity, acc);
  split_large(m / d, multiplicity, acc);
}

// Strips primes below the trial bound. Returns the remaining cofactor and
// whether the loop ran out of primes (false means the cofactor is 1 or prime).
struct TrialResult {
  Integer rest;
  bool exhausted = false;
};

template <typename OnPrime>
TrialResult trial_divide(const Integer& n, OnPrime&& on_prime) {
  TrialResult out{n, true};
  for (std::uint32_t p : small_primes()) {
    if (out.rest < Integer(p) * p) {
      out.exhausted = false;
      break;
    }
    if (mpz_divisible_ui_p(out.rest.get_mpz_t(), p)) {
      Integer pz = p;
      unsigned e = static_cast<unsigned>(mpz_remove(out.rest.get_mpz_t(), out.rest.get_mpz_t(), pz.get_mpz_t()));
      if (!on_prime(p, e)) return out;
    }
  }
  return out;
}

}  // namespace

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

bool exact_root(const Integer& n, unsigned long k, Integer& root) {
  if (n < 0) return false;
  return mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 41 * 41) return true;
  for (unsigned long a : kBases) {
    if (!strong_probable_prime(n, a)) return false;
  }
  // 3317044064679887385961981 is the least strong pseudoprime to all twelve bases.
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  return strong_lucas_probable_prime(n);
}

Integer Factorization::product() const {
  Integer out = cofactor;
  for (const auto& [p, e] : factors) out *= pow(p, e);
  return out;
}

unsigned Factorization::exponent_of(const Integer& q) const {
  for (const auto& f : factors) {
    if (f.prime == q) return f.exponent;
  }
  return 0;
}

Factorization factorize(const Integer& n, std::uint64_t rho_budget) {
  if (n < 1) throw InvalidInput("factorize: input must be positive");

  FactorAccumulator acc;
  acc.budget = rho_budget;
  TrialResult trial = trial_divide(n, [&](std::uint32_t p, unsigned e) {
    acc.add(Integer(p), e);
    return true;
  });
  if (!trial.exhausted) {
    if (trial.rest > 1) acc.add(trial.rest, 1);
  } else {
    split_large(trial.rest, 1, acc);
  }

  Factorization out;
  out.factors.reserve(acc.primes.size());
  for (auto& [p, e] : acc.primes) out.factors.push_back({p, e});
  out.cofactor = acc.cofactor;
  out.complete = (out.cofactor == 1);
  return out;
}

std::string to_string(SquarefreeStatus::Kind kind) {
  switch (kind) {
    case SquarefreeStatus::Kind::Squarefree: return "Squarefree";
    case SquarefreeStatus::Kind::NotSquarefree: return "NotSquarefree";
    case SquarefreeStatus::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

SquarefreeStatus squarefree_status(const Integer& n, std::uint64_t rho_budget) {
  if (n < 1) throw InvalidInput("squarefree_status: input must be positive");

  std::uint32_t square_witness = 0;
  TrialResult trial = trial_divide(n, [&](std::uint32_t p, unsigned e) {
    if (e >= 2) {
      square_witness = p;
      return false;
    }
    return true;
  });
  if (square_witness != 0) return SquarefreeStatus::not_squarefree(Integer(square_witness));

  const Integer& rest = trial.rest;
  if (!trial.exhausted || rest == 1 || is_prime(rest)) return SquarefreeStatus::squarefree();

  // Every prime factor of `rest` exceeds the trial bound.
  Integer root;
  if (unsigned long k = perfect_power_exponent(rest, root); k > 1) {
    Factorization rf = factorize(root, rho_budget);
    if (!rf.factors.empty()) return SquarefreeStatus::not_squarefree(rf.factors.front().prime);
    return SquarefreeStatus::unknown(rest);
  }
  // Below bound^3 a composite without small factors is p*q with p != q
  // (p == q was excluded by the perfect-power check).
  const Integer bound = kTrialDivisionBound;
  if (rest < bound * bound * bound) return SquarefreeStatus::squarefree();

  Factorization f = factorize(rest, rho_budget);
  for (const auto& pp : f.factors) {
    if (pp.exponent >= 2) return SquarefreeStatus::not_squarefree(pp.prime);
  }
  if (!f.complete) return SquarefreeStatus::unknown(f.cofactor);
  return SquarefreeStatus::squarefree();
}

unsigned valuation(const Integer& q, const Integer& n) {
  if (n == 0) throw InvalidInput("valuation: argument must be nonzero");
  if (q < 2) throw InvalidInput("valuation: base must be at least 2");
  Integer tmp = n;
  return static_cast<unsigned>(mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), q.get_mpz_t()));
}

}  // namespace mperron
