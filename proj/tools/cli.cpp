#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "mperron/classification.hpp"
#include "mperron/errors.hpp"
#include "mperron/family.hpp"
#include "mperron/json.hpp"
#include "mperron/monogenicity.hpp"
#include "mperron/search.hpp"
#include "mperron/verify.hpp"

namespace mperron {
namespace {

Integer parse_integer(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw InvalidInput(std::string("invalid ") + what + ": '" + text + "'");
  return v;
}

unsigned parse_degree(const std::string& text) {
  const Integer v = parse_integer(text, "n");
  if (v < 2 || v > 1000) throw InvalidInput("n must be between 2 and 1000, got " + text);
  return static_cast<unsigned>(v.get_ui());
}

FamilyParams parse_family(const std::vector<std::string>& triple) {
  if (triple.size() != 3) throw InvalidInput("expected three values: N A P");
  return FamilyParams::make(parse_degree(triple[0]), parse_integer(triple[1], "a"), parse_integer(triple[2], "p"));
}

struct PolyInput {
  std::string coeffs;
  std::vector<std::string> trinomial;

  void attach(CLI::App* cmd) {
    auto* c = cmd->add_option("--coeffs", coeffs, "Ascending coefficients c0,c1,...,cn (monic)");
    auto* t = cmd->add_option("--trinomial", trinomial, "Family member x^N - A x^(N-1) - P")->expected(3);
    c->excludes(t);
  }

  IntPoly resolve() const {
    if (!trinomial.empty()) return build(parse_family(trinomial));
    if (coeffs.empty()) throw InvalidInput("one of --coeffs or --trinomial is required");
    IntPoly f = parse_poly(coeffs);
    if (!f.is_monic()) throw InvalidInput("polynomial must be monic: " + pretty(f));
    if (f.degree() < 1) throw InvalidInput("polynomial must have degree at least 1");
    return f;
  }
};

RootOptions root_options(unsigned precision) {
  if (precision < 32 || precision > 65536) throw InvalidInput("--precision must be between 32 and 65536 bits");
  RootOptions o;
  o.start_bits = precision;
  return o;
}

int cmd_disc(const std::vector<std::string>& triple, std::ostream& out) {
  const FamilyParams fp = parse_family(triple);
  const Integer closed = discriminant_closed(fp);
  const Integer oracle = discriminant_resultant(build(fp));
  out << closed << ' ' << oracle << '\n';
  out << Json{{"n", fp.n}, {"a", fp.a.get_str()}, {"p", fp.p.get_str()}, {"closed", closed.get_str()},
              {"oracle", oracle.get_str()}, {"agree", closed == oracle}}
             .dump()
      << '\n';
  if (closed != oracle) throw OracleViolation("closed-form discriminant disagrees with the resultant");
  return kExitOk;
}

struct SearchArgs {
  std::optional<unsigned> n;
  std::optional<long> a;
  std::optional<unsigned> n_max;
  std::optional<long> a_max;
  std::string p_max;
  bool coprime_only = false;
  std::string format = "json";
  std::string ledger;
};

int cmd_search(const SearchArgs& args, std::uint64_t budget, unsigned precision, std::ostream& out) {
  SearchSpec spec;
  if (args.n && args.n_max) throw InvalidInput("give either --n or --nmax, not both");
  if (args.a && args.a_max) throw InvalidInput("give either --a or --amax, not both");
  if (!args.n && !args.n_max) throw InvalidInput("one of --n or --nmax is required");
  if (!args.a && !args.a_max) throw InvalidInput("one of --a or --amax is required");
  if (args.n) spec.n_min = spec.n_max = *args.n;
  if (args.n_max) spec.n_max = *args.n_max;
  if (args.a) spec.a_min = spec.a_max = *args.a;
  if (args.a_max) spec.a_max = *args.a_max;
  if (args.p_max.empty()) throw InvalidInput("--pmax is required");
  spec.p_max = parse_integer(args.p_max, "pmax");
  spec.coprime_only = args.coprime_only;
  spec.certificate.rho_budget = budget;
  spec.certificate.roots = root_options(precision);
  if (args.format != "json" && args.format != "csv") throw InvalidInput("--format must be json or csv");
  const bool csv = args.format == "csv";
  spec.validate();

  std::string ledger_path = args.ledger;
  if (ledger_path.empty()) {
    if (const char* env = std::getenv(kLedgerEnv)) ledger_path = env;
  }
  std::optional<LedgerWriter> ledger;
  if (!ledger_path.empty()) ledger.emplace(ledger_path);

  if (csv) out << csv_header() << '\n';
  const SearchSummary s = run_search(spec, [&](const Certificate& c) {
    if (ledger) ledger->append(c);
    if (csv) out << csv_row(c) << '\n';
    else out << to_json(c).dump() << '\n';
  });
  if (csv) {
    out << "# summary: certificates=" << s.certificates << " hits=" << s.hits << " misses=" << s.misses
        << " unknowns=" << s.unknowns << " reducible=" << s.reducible << '\n';
  } else {
    out << Json{{"summary",
                 {{"certificates", s.certificates},
                  {"hits", s.hits},
                  {"misses", s.misses},
                  {"unknowns", s.unknowns},
                  {"reducible", s.reducible}}}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_verify(unsigned n_max, long a_max, const std::string& p_max, bool fault, std::uint64_t budget, unsigned precision,
               std::ostream& out) {
  VerifySpec spec;
  spec.n_max = n_max;
  spec.a_max = a_max;
  spec.p_max = parse_integer(p_max, "pmax");
  spec.inject_disc_sign_fault = fault;
  spec.certificate.rho_budget = budget;
  spec.certificate.roots = root_options(precision);
  const VerifyReport r = run_verify(spec);
  for (const auto& f : r.failures) {
    out << "FAIL (n,a,p)=(" << f.n << ',' << f.a << ',' << f.p << ") " << f.property;
    if (!f.detail.empty()) out << ": " << f.detail;
    out << '\n';
  }
  out << "verify: points=" << r.points << " checks=" << r.checks << " failures=" << r.failures.size()
      << " unknowns=" << r.unknowns << (r.passed() ? " PASS" : " FAIL") << '\n';
  return r.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monogenic strictly-Perron trinomials: discriminants, classification, index tests, grid search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  std::uint64_t budget = kDefaultRhoBudget;
  unsigned precision = 64;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "Pollard-rho iteration budget for factoring")->capture_default_str();
    cmd->add_option("--precision", precision, "Starting root-solver precision in bits")->capture_default_str();
  };

  std::vector<std::string> disc_args;
  auto* disc = app.add_subcommand("disc", "Closed-form and resultant discriminants of x^N - A x^(N-1) - P");
  disc->add_option("params", disc_args, "N A P")->expected(3)->required();

  PolyInput classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "Perron / Pisot / Salem / anti-Pisot / strictly-Perron class");
  classify_in.attach(classify_cmd);
  add_common(classify_cmd);

  PolyInput mono_in;
  std::string method = "both";
  auto* mono = app.add_subcommand("monogenic", "Decide monogenicity prime by prime");
  mono_in.attach(mono);
  mono->add_option("--method", method, "jks, dedekind or both")->capture_default_str();
  add_common(mono);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Certificates for every prime p <= pmax");
  search->add_option("--n", search_args.n, "Fixed degree");
  search->add_option("--a", search_args.a, "Fixed coefficient a");
  search->add_option("--nmax", search_args.n_max, "Degrees 2..NMAX");
  search->add_option("--amax", search_args.a_max, "Coefficients 1..AMAX");
  search->add_option("--pmax", search_args.p_max, "Largest prime considered (inclusive)");
  search->add_flag("--coprime-only", search_args.coprime_only, "Skip (n, a) with gcd(a, n) != 1");
  search->add_option("--format", search_args.format, "json or csv")->capture_default_str();
  search->add_option("--ledger", search_args.ledger, std::string("Append records to this JSON-lines file (default $") + kLedgerEnv + ")");
  add_common(search);

  unsigned v_nmax = 8;
  long v_amax = 6;
  std::string v_pmax = "300";
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Check every invariant on a grid");
  verify->add_option("--nmax", v_nmax, "Largest degree")->capture_default_str();
  verify->add_option("--amax", v_amax, "Largest a")->capture_default_str();
  verify->add_option("--pmax", v_pmax, "Largest prime (inclusive)")->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault)->group("");
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? version() + "\n" : app.help());
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*disc) return cmd_disc(disc_args, out);
    if (*classify_cmd) {
      const Classification c = classify(classify_in.resolve(), root_options(precision));
      out << to_json(c).dump() << '\n';
      return kExitOk;
    }
    if (*mono) {
      const IndexMethod m = parse_index_method(method);
      const IntPoly f = mono_in.resolve();
      if (f.degree() < 2) throw InvalidInput("monogenicity needs degree at least 2");
      const MonogenicityReport r = monogenic(f, m, budget);
      out << to_json(r).dump() << '\n';
      return r.verdict == MonogenicityReport::Verdict::Unknown ? kExitBudget : kExitOk;
    }
    if (*search) return cmd_search(search_args, budget, precision, out);
    if (*verify) return cmd_verify(v_nmax, v_amax, v_pmax, inject_fault, budget, precision, out);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const OracleViolation& e) {
    err << "oracle violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const NonConvergence& e) {
    err << "no convergence: " << e.what() << '\n';
    return kExitPrecision;
  }
  return kExitInvalidInput;
}

}  // namespace mperron
