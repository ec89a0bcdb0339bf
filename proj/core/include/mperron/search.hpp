#pragma once

// Grid search over (n, a, p) with parallel certificate evaluation. Results
// are delivered strictly in (n, a, p) order whatever order workers finish in.

#include <fstream>
#include <functional>
#include <mutex>
#include <string>

#include "mperron/family.hpp"

namespace mperron {

struct SearchSpec {
  unsigned n_min = 2;
  unsigned n_max = 2;
  Integer a_min = 1;
  Integer a_max = 1;
  Integer p_max = 2;
  bool coprime_only = false;
  CertificateOptions certificate;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws InvalidInput for empty ranges, n < 2, a < 1 or p_max < 2.
  void validate() const;
};

struct SearchSummary {
  std::size_t certificates = 0;
  std::size_t hits = 0;       // monogenic strictly-Perron
  std::size_t misses = 0;     // irreducible, G(p) not squarefree
  std::size_t unknowns = 0;   // irreducible, squarefreeness or monogenicity undecided
  std::size_t reducible = 0;

  friend bool operator==(const SearchSummary&, const SearchSummary&) = default;
};

using CertificateSink = std::function<void(const Certificate&)>;

/// Evaluates every prime p <= p_max for each (n, a) in range. The first
/// exception raised by any certificate is rethrown once the certificates
/// before it have been delivered.
SearchSummary run_search(const SearchSpec& spec, const CertificateSink& sink);

std::vector<Integer> primes_up_to(const Integer& bound);

/// Append-only JSON-lines ledger. Existing lines are never touched.
class LedgerWriter {
 public:
  explicit LedgerWriter(const std::string& path);
  void append(const Certificate& c);

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

// Environment variable naming the default ledger path.
inline constexpr const char* kLedgerEnv = "MPERRON_LEDGER";

// Fixed CSV header and one flattened row (lambda to 12 significant digits).
std::string csv_header();
std::string csv_row(const Certificate& c);

}  // namespace mperron
