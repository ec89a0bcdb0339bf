#include "mperron/family.hpp"

#include "mperron/errors.hpp"
#include "mperron/irreducibility.hpp"
#include "mperron/matrix.hpp"

namespace mperron {
namespace {

using Verdict = MonogenicityReport::Verdict;

void require(bool ok, const FamilyParams& fp, const std::string& what) {
  if (!ok) {
    throw OracleViolation("(n,a,p)=(" + std::to_string(fp.n) + "," + fp.a.get_str() + "," + fp.p.get_str() + "): " + what);
  }
}

}  // namespace

FamilyParams FamilyParams::make(unsigned n, const Integer& a, const Integer& p) {
  if (n < 2) throw InvalidInput("n must be at least 2");
  if (a < 1) throw InvalidInput("a must be at least 1");
  if (!is_prime(p)) throw InvalidInput("p must be prime, got " + p.get_str());
  return {n, a, p};
}

bool FamilyParams::coprime() const {
  Integer g;
  const Integer nn(n);
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), nn.get_mpz_t());
  return g == 1;
}

IntPoly build(const FamilyParams& fp) {
  std::vector<Integer> c(fp.n + 1, 0);
  c[0] = -fp.p;
  c[fp.n - 1] = -fp.a;
  c[fp.n] = 1;
  return IntPoly(std::move(c));
}

Integer G_value(const FamilyParams& fp) {
  return pow(Integer(fp.n), fp.n) * fp.p + pow(fp.a, fp.n) * pow(Integer(fp.n - 1), fp.n - 1);
}

Integer discriminant_closed(const FamilyParams& fp) {
  const unsigned long e = (static_cast<unsigned long>(fp.n - 1) * (fp.n + 2) / 2) % 2;
  Integer d = pow(fp.p, fp.n - 2) * G_value(fp);
  return e ? Integer(-d) : d;
}

bool family_irreducible(const FamilyParams& fp) { return !(fp.n % 2 == 0 && fp.p == fp.a + 1); }

TrinomialParams family_trinomial(const FamilyParams& fp) { return TrinomialParams::make(fp.n, fp.n - 1, -fp.a, -fp.p); }

Verdict family_monogenic(const FamilyParams& fp, std::uint64_t rho_budget) {
  if (!family_irreducible(fp)) throw InvalidInput("family_monogenic: f is reducible (n even, p = a + 1)");
  if (!fp.coprime()) throw InvalidInput("family_monogenic: requires gcd(a, n) = 1");
  switch (squarefree_status(G_value(fp), rho_budget).kind) {
    case SquarefreeStatus::Kind::Squarefree: return Verdict::Monogenic;
    case SquarefreeStatus::Kind::NotSquarefree: return Verdict::NotMonogenic;
    case SquarefreeStatus::Kind::Unknown: return Verdict::Unknown;
  }
  return Verdict::Unknown;
}

RealRootCounts descartes_profile(const FamilyParams& fp, const RootOptions& options) {
  if (!family_irreducible(fp)) throw InvalidInput("descartes_profile: f is reducible (n even, p = a + 1)");
  const ProfiledRoots pr = modulus_profile(build(fp), options);
  return {pr.profile.real_positive, pr.profile.real_negative};
}

std::string conclusion_text(bool irreducible, const std::string& class_name, std::optional<Verdict> monogenic) {
  if (!irreducible) return "reducible";
  std::string mono = "monogenicity unknown";
  if (monogenic == Verdict::Monogenic) mono = "monogenic";
  if (monogenic == Verdict::NotMonogenic) mono = "NOT monogenic";
  if (class_name == "StrictlyPerron") {
    if (monogenic == Verdict::Monogenic) return "monogenic strictly-Perron";
    return "strictly-Perron, " + mono;
  }
  return class_name + ", " + mono;
}

Certificate strictly_perron_certificate(const FamilyParams& fp, const CertificateOptions& options) {
  Certificate c;
  c.n = fp.n;
  c.a = fp.a;
  c.p = fp.p;
  c.poly = build(fp);

  c.disc = discriminant_closed(fp);
  const Integer oracle_disc = discriminant_resultant(c.poly);
  require(c.disc == oracle_disc, fp, "closed-form discriminant " + c.disc.get_str() + " != resultant " + oracle_disc.get_str());

  c.G = G_value(fp);
  c.G_status = squarefree_status(c.G, options.rho_budget).kind;

  c.irreducible = family_irreducible(fp);
  require(c.irreducible == is_irreducible(c.poly, options.roots), fp, "reducibility dichotomy disagrees with factorization");

  const IntMatrix companion = companion_matrix(fp.n, fp.a, fp.p);
  require(characteristic_polynomial(companion) == c.poly, fp, "companion characteristic polynomial differs from f");
  require(matrix_irreducible(companion), fp, "companion digraph is not strongly connected");

  c.theorem_applicable = fp.coprime() && fp.p > fp.a + 1 && c.irreducible;

  if (!c.irreducible) {
    c.class_name = "NotIrreducible";
    c.conclusion = conclusion_text(false, c.class_name, std::nullopt);
    return c;
  }

  const MonogenicityReport report = monogenic(c.poly, IndexMethod::Both, options.rho_budget);
  c.monogenic = report.verdict;
  if (fp.coprime()) {
    const Verdict closed = family_monogenic(fp, options.rho_budget);
    if (closed != Verdict::Unknown && report.verdict != Verdict::Unknown) {
      require(closed == report.verdict, fp,
              "G(p) squarefreeness says " + to_string(closed) + ", index tests say " + to_string(report.verdict));
    }
  }

  const Classification cls = classify(c.poly, options.roots);
  c.class_name = cls.name();
  if (cls.lambda) {
    c.lambda = cls.lambda->to_string(kLambdaDigits);
    const Real pf = dominant_eigenvalue(companion);
    require(abs(pf - *cls.lambda) < 1e-8, fp, "power iteration " + pf.to_string(15) + " != dominant root " + *c.lambda);
  }

  const RealRootCounts counts{cls.profile.real_positive, cls.profile.real_negative};
  require(counts == RealRootCounts{1, fp.n % 2 == 0 ? 1u : 0u}, fp, "real-root counts violate the parity rule");

  if (c.theorem_applicable && c.G_status == SquarefreeStatus::Kind::Squarefree) {
    require(cls.subclass == Classification::Subclass::StrictlyPerron && c.monogenic == Verdict::Monogenic, fp,
            "theorem hypotheses hold but result is " + c.class_name + " / " + to_string(*c.monogenic));
  }

  c.conclusion = conclusion_text(true, c.class_name, c.monogenic);
  return c;
}

}  // namespace mperron
