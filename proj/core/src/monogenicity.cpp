#include "mperron/monogenicity.hpp"

#include <numeric>

#include "mperron/errors.hpp"
#include "mperron/irreducibility.hpp"

namespace mperron {
namespace {

using Result = LocalIndexVerdict::Result;

Integer mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool divides(const Integer& q, const Integer& v) { return mpz_divisible_p(v.get_mpz_t(), q.get_mpz_t()) != 0; }

Integer powmod(const Integer& base, const Integer& exponent, const Integer& m) {
  Integer out;
  Integer b = mod(base, m);
  mpz_powm(out.get_mpz_t(), b.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return out;
}

Integer powmod(const Integer& base, unsigned long exponent, const Integer& m) { return powmod(base, Integer(exponent), m); }

// (v + (-v)^(q^e)) / q  mod q, evaluated through residues mod q^2.
Integer frobenius_quotient(const Integer& v, const Integer& q, unsigned e) {
  const Integer q2 = q * q;
  const Integer qe = pow(q, e);
  const Integer t = mod(v + powmod(-v, qe, q2), q2);
  if (!divides(q, t)) throw OracleViolation("frobenius quotient is not integral");
  return t / q;
}

LocalIndexVerdict verdict(const Integer& q, bool not_divides, std::string condition) {
  return {q, not_divides ? Result::NotDividesIndex : Result::DividesIndex, std::move(condition), {}};
}

// Polynomial (in y) power with coefficients reduced mod m.
IntPoly pow_mod_coeffs(const IntPoly& base, const Integer& exponent, const Integer& m) {
  auto reduce_all = [&](const IntPoly& p) {
    std::vector<Integer> c = p.coefficients();
    for (auto& x : c) x = mod(x, m);
    return IntPoly(std::move(c));
  };
  IntPoly result({1});
  IntPoly b = reduce_all(base);
  Integer e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = reduce_all(result * b);
    e >>= 1;
    if (e > 0) b = reduce_all(b * b);
  }
  return result;
}

// Substitutes y -> x^s.
IntPoly inflate(const IntPoly& p, unsigned s) {
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()) * s + 1, 0);
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i) * s] = p[i];
  return IntPoly(std::move(out));
}

LocalIndexVerdict fallback(const TrinomialParams& t, const Integer& q, bool allow, const char* why) {
  if (!allow) return {q, Result::NotApplicable, "", why};
  LocalIndexVerdict v = dedekind_local_test(t.polynomial(), q);
  v.condition = "dedekind-fallback";
  v.reason = why;
  return v;
}

}  // namespace

TrinomialParams TrinomialParams::make(unsigned n, unsigned m, Integer A, Integer B) {
  if (!(0 < m && m < n)) throw InvalidInput("trinomial exponents must satisfy 0 < m < n");
  if (A == 0 || B == 0) throw InvalidInput("trinomial coefficients A and B must be nonzero");
  TrinomialParams t;
  t.n = n;
  t.m = m;
  t.A = std::move(A);
  t.B = std::move(B);
  t.d0 = std::gcd(n, m);
  t.m1 = m / t.d0;
  t.n1 = n / t.d0;
  return t;
}

std::optional<TrinomialParams> TrinomialParams::from_poly(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 2 || f[0] == 0) return std::nullopt;
  std::optional<unsigned> middle;
  for (int i = 1; i < f.degree(); ++i) {
    if (f[i] == 0) continue;
    if (middle) return std::nullopt;
    middle = static_cast<unsigned>(i);
  }
  if (!middle) return std::nullopt;
  return make(static_cast<unsigned>(f.degree()), *middle, f[*middle], f[0]);
}

IntPoly TrinomialParams::polynomial() const {
  std::vector<Integer> c(n + 1, 0);
  c[0] = B;
  c[m] = A;
  c[n] = 1;
  return IntPoly(std::move(c));
}

std::string to_string(LocalIndexVerdict::Result result) {
  switch (result) {
    case Result::NotDividesIndex: return "NotDividesIndex";
    case Result::DividesIndex: return "DividesIndex";
    case Result::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

Integer jks_condition_v_quantity(const TrinomialParams& t) {
  const unsigned diff = t.n1 - t.m1;
  const Integer first = pow(t.B, diff) * pow(Integer(t.n1), t.n1);
  Integer second = pow(t.A, t.n1) * pow(Integer(t.m1), t.m1) * pow(Integer(static_cast<long>(t.m1) - static_cast<long>(t.n1)), diff);
  if (t.m1 % 2 == 1) second = -second;
  return first - second;
}

LocalIndexVerdict jks_local_test(const TrinomialParams& t, const Integer& q, bool allow_fallback) {
  if (!is_prime(q)) throw InvalidInput("jks_local_test: q must be prime");
  const Integer disc = discriminant_resultant(t.polynomial());
  if (!divides(q, disc)) throw InvalidInput("jks_local_test: " + q.get_str() + " does not divide the discriminant");

  const bool q_a = divides(q, t.A);
  const bool q_b = divides(q, t.B);

  if (q_a && q_b) return verdict(q, !divides(q * q, t.B), "(i)");

  if (q_a && !q_b) {
    const unsigned j = valuation(q, Integer(t.n));
    if (j == 0) return fallback(t, q, allow_fallback, "q | A, q does not divide B or n");
    const Integer a2 = mod(t.A / q, q);
    const Integer b1 = frobenius_quotient(t.B, q, j);
    if (a2 == 0 && b1 != 0) return verdict(q, true, "(ii)");
    // A common root of x^(n/q^j) + B and a2 x^m + b1 mod q exists iff
    // (-B)^m1 a2^n1 = (-b1)^n1; the difference, not the sum, decides.
    const Integer inner = mod(powmod(-t.B, t.m1, q) * powmod(a2, t.n1, q) - powmod(-b1, t.n1, q), q);
    return verdict(q, mod(a2 * inner, q) != 0, "(ii)");
  }

  if (!q_a && q_b) {
    const unsigned l = valuation(q, Integer(t.n - t.m));
    const Integer a1 = frobenius_quotient(t.A, q, l);
    const Integer b2 = mod(t.B / q, q);
    if (a1 == 0 && b2 != 0) return verdict(q, true, "(iii)");
    const unsigned e = t.n1 - t.m1;
    const Integer inner = mod(powmod(-t.A, t.m1, q) * powmod(a1, e, q) - powmod(-b2, e, q), q);
    const Integer whole = mod(a1 * powmod(b2, t.m - 1, q) * inner, q);
    return verdict(q, whole != 0, "(iii)");
  }

  if (divides(q, Integer(t.m))) {
    const unsigned k = std::min(valuation(q, Integer(t.n)), valuation(q, Integer(t.m)));
    if (k == 0) return fallback(t, q, allow_fallback, "q | m but q does not divide n");
    const unsigned long Q = pow(q, k).get_ui();
    const unsigned s_prime = static_cast<unsigned>(t.n / Q);
    const unsigned s = static_cast<unsigned>(t.m / Q);
    const Integer q2 = q * q;

    // (A y^Q + B + (-A y - B)^Q) / q with y = x^s, coefficients mod q^2.
    IntPoly numerator = pow_mod_coeffs(IntPoly(std::vector<Integer>{-t.B, -t.A}), Integer(Q), q2);
    numerator += IntPoly::monomial(t.A, Q);
    numerator += IntPoly(std::vector<Integer>{t.B});
    std::vector<Integer> c = numerator.coefficients();
    for (auto& x : c) {
      x = mod(x, q2);
      if (!divides(q, x)) throw OracleViolation("condition (iv) numerator is not divisible by q");
      x /= q;
    }
    const ModPoly second(inflate(IntPoly(std::move(c)), s), q);

    std::vector<Integer> first_c(s_prime + 1, 0);
    first_c[0] = t.B;
    first_c[s] += t.A;
    first_c[s_prime] += 1;
    const ModPoly first(IntPoly(std::move(first_c)), q);
    return verdict(q, gcd_mod(first, second).degree() == 0, "(iv)");
  }

  const Integer quantity = jks_condition_v_quantity(t);
  return verdict(q, !divides(q * q, quantity), "(v)");
}

LocalIndexVerdict dedekind_local_test(const IntPoly& f, const Integer& q) {
  if (!f.is_monic()) throw InvalidInput("dedekind_local_test: f must be monic");
  if (!is_prime(q)) throw InvalidInput("dedekind_local_test: q must be prime");
  const ModPoly fbar(f, q);
  const ModPoly g = radical(fbar);
  const ModDivision split = divmod(fbar, g);
  if (!split.remainder.is_zero()) throw OracleViolation("radical does not divide f mod q");
  const ModPoly& h = split.quotient;

  const IntPoly gh_minus_f = lift(g) * lift(h) - f;
  std::vector<Integer> c = gh_minus_f.coefficients();
  for (auto& x : c) {
    if (!divides(q, x)) throw OracleViolation("g*h - f is not divisible by q");
    x /= q;
  }
  const ModPoly F(IntPoly(std::move(c)), q);

  ModPoly common = gcd_mod(g, h);
  if (!F.is_zero()) common = gcd_mod(common, F);
  return verdict(q, common.degree() == 0, "dedekind");
}

IndexMethod parse_index_method(const std::string& text) {
  if (text == "jks") return IndexMethod::JKS;
  if (text == "dedekind") return IndexMethod::Dedekind;
  if (text == "both") return IndexMethod::Both;
  throw InvalidInput("unknown method '" + text + "' (expected jks, dedekind or both)");
}

std::string to_string(IndexMethod method) {
  switch (method) {
    case IndexMethod::JKS: return "jks";
    case IndexMethod::Dedekind: return "dedekind";
    case IndexMethod::Both: return "both";
  }
  return "both";
}

std::string to_string(MonogenicityReport::Verdict v) {
  switch (v) {
    case MonogenicityReport::Verdict::Monogenic: return "Monogenic";
    case MonogenicityReport::Verdict::NotMonogenic: return "NotMonogenic";
    case MonogenicityReport::Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

MonogenicityReport monogenic(const IntPoly& f, IndexMethod method, std::uint64_t rho_budget) {
  if (!f.is_monic() || f.degree() < 2) throw InvalidInput("monogenic: expects a monic polynomial of degree >= 2");
  std::optional<TrinomialParams> trinomial;
  if (method != IndexMethod::Dedekind) {
    trinomial = TrinomialParams::from_poly(f);
    if (!trinomial) throw InvalidInput("monogenic: the trinomial test needs x^n + A x^m + B, got " + pretty(f));
  }
  if (!is_irreducible(f)) throw InvalidInput("monogenic: polynomial is reducible: " + pretty(f));

  MonogenicityReport report;
  report.poly = f;
  report.disc = discriminant_resultant(f);
  report.disc_factors = factorize(abs(report.disc), rho_budget);

  std::vector<Integer> primes;
  for (const auto& [q, e] : report.disc_factors.factors) {
    if (e >= 2) primes.push_back(q);
  }
  bool undecided_cofactor = false;
  if (!report.disc_factors.complete) {
    // The cofactor shares no prime with the listed factors.
    const SquarefreeStatus s = squarefree_status(report.disc_factors.cofactor, rho_budget);
    if (s.kind == SquarefreeStatus::Kind::NotSquarefree) {
      primes.push_back(s.witness);
      std::sort(primes.begin(), primes.end());
    } else if (s.kind == SquarefreeStatus::Kind::Unknown) {
      undecided_cofactor = true;
      report.reason = "discriminant cofactor " + report.disc_factors.cofactor.get_str() + " could not be factored";
    }
  }

  std::optional<Integer> witness;
  for (const Integer& q : primes) {
    std::optional<LocalIndexVerdict> jks, ded;
    if (method != IndexMethod::Dedekind) jks = jks_local_test(*trinomial, q);
    if (method != IndexMethod::JKS) ded = dedekind_local_test(f, q);
    if (jks && ded && jks->result != ded->result) {
      throw OracleViolation("index test disagreement for " + pretty(f) + " at q=" + q.get_str() + ": trinomial test " +
                            jks->condition + " says " + to_string(jks->result) + ", Dedekind says " +
                            to_string(ded->result));
    }
    const LocalIndexVerdict& decisive = jks ? *jks : *ded;
    if (decisive.result == Result::DividesIndex && !witness) witness = q;
    if (jks) report.locals.push_back(*jks);
    if (ded) report.locals.push_back(*ded);
  }

  if (witness) {
    report.verdict = MonogenicityReport::Verdict::NotMonogenic;
    report.witness = *witness;
  } else if (undecided_cofactor) {
    report.verdict = MonogenicityReport::Verdict::Unknown;
  } else {
    report.verdict = MonogenicityReport::Verdict::Monogenic;
  }
  return report;
}

}  // namespace mperron
