#include "mperron/search.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "mperron/errors.hpp"
#include "mperron/json.hpp"

namespace mperron {
namespace {

struct Job {
  FamilyParams params;
};

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string short_decimal(const std::string& decimal, int digits) {
  Real r(128);
  if (mpfr_set_str(r.get(), decimal.c_str(), 10, MPFR_RNDN) != 0) return decimal;
  return r.to_string(digits);
}

}  // namespace

void SearchSpec::validate() const {
  if (n_min < 2) throw InvalidInput("search: n must be at least 2");
  if (n_max < n_min) throw InvalidInput("search: empty n range");
  if (a_min < 1) throw InvalidInput("search: a must be at least 1");
  if (a_max < a_min) throw InvalidInput("search: empty a range");
  if (p_max < 2) throw InvalidInput("search: pmax must be at least 2");
}

std::vector<Integer> primes_up_to(const Integer& bound) {
  std::vector<Integer> out;
  if (bound < 2) return out;
  if (!bound.fits_ulong_p() || bound > 100'000'000) throw InvalidInput("prime bound too large for a sieve");
  const unsigned long b = bound.get_ui();
  std::vector<bool> composite(b + 1, false);
  for (unsigned long i = 2; i <= b; ++i) {
    if (composite[i]) continue;
    out.emplace_back(i);
    for (unsigned long j = i * i; j <= b; j += i) composite[j] = true;
  }
  return out;
}

SearchSummary run_search(const SearchSpec& spec, const CertificateSink& sink) {
  spec.validate();
  const std::vector<Integer> primes = primes_up_to(spec.p_max);
  std::vector<Job> jobs;
  for (unsigned n = spec.n_min; n <= spec.n_max; ++n) {
    for (Integer a = spec.a_min; a <= spec.a_max; ++a) {
      FamilyParams probe{n, a, 2};
      if (spec.coprime_only && !probe.coprime()) continue;
      for (const Integer& p : primes) jobs.push_back({FamilyParams::make(n, a, p)});
    }
  }

  struct Slot {
    std::optional<Certificate> value;
    std::exception_ptr error;
    bool done = false;
  };
  std::vector<Slot> slots(jobs.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || stop.load()) return;
      Slot local;
      try {
        local.value = strictly_perron_certificate(jobs[i].params, spec.certificate);
      } catch (...) {
        local.error = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        slots[i].value = std::move(local.value);
        slots[i].error = local.error;
        slots[i].done = true;
      }
      ready.notify_all();
    }
  };

  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  SearchSummary summary;
  std::exception_ptr failure;
  for (std::size_t i = 0; i < jobs.size() && !failure; ++i) {
    Slot slot;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[i].done; });
      slot = std::move(slots[i]);
    }
    if (slot.error) {
      failure = slot.error;
      stop = true;
      break;
    }
    const Certificate& c = *slot.value;
    ++summary.certificates;
    if (!c.irreducible) {
      ++summary.reducible;
    } else {
      if (c.conclusion == "monogenic strictly-Perron") ++summary.hits;
      if (c.G_status == SquarefreeStatus::Kind::NotSquarefree) ++summary.misses;
      if (c.G_status == SquarefreeStatus::Kind::Unknown || c.monogenic == MonogenicityReport::Verdict::Unknown) {
        ++summary.unknowns;
      }
    }
    try {
      sink(c);
    } catch (...) {
      failure = std::current_exception();
      stop = true;
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

LedgerWriter::LedgerWriter(const std::string& path) : out_(path, std::ios::app) {
  if (!out_) throw InvalidInput("cannot open ledger '" + path + "' for appending");
}

void LedgerWriter::append(const Certificate& c) {
  std::lock_guard lock(mutex_);
  out_ << ledger_record(c, utc_timestamp()).dump() << '\n';
  out_.flush();
}

std::string csv_header() {
  return "n,a,p,poly,disc,G,G_status,irreducible,monogenic,class,lambda,theorem_applicable,conclusion";
}

std::string csv_row(const Certificate& c) {
  std::ostringstream row;
  row << c.n << ',' << c.a << ',' << c.p << ',' << csv_quote(format_poly(c.poly)) << ',' << c.disc << ',' << c.G << ','
      << to_string(c.G_status) << ',' << (c.irreducible ? "true" : "false") << ','
      << (c.monogenic ? to_string(*c.monogenic) : "") << ',' << c.class_name << ','
      << (c.lambda ? short_decimal(*c.lambda, 12) : "") << ',' << (c.theorem_applicable ? "true" : "false") << ','
      << csv_quote(c.conclusion);
  return row.str();
}

}  // namespace mperron
