#pragma once

// JSON encodings. Unbounded integers are decimal strings and polynomials are
// arrays of ascending coefficients, so no value is ever squeezed through a
// double.

#include <string>

#include <nlohmann/json.hpp>

#include "mperron/classification.hpp"
#include "mperron/family.hpp"
#include "mperron/monogenicity.hpp"

namespace mperron {

using Json = nlohmann::json;

Json to_json(const IntPoly& f);
IntPoly poly_from_json(const Json& j);

Json to_json(const Factorization& f);
Json to_json(const LocalIndexVerdict& v);
Json to_json(const MonogenicityReport& r);
Json to_json(const Classification& c);

// Keys: n, a, p, poly, disc, G, G_status, irreducible, monogenic, class,
// lambda, theorem_applicable, conclusion.
Json to_json(const Certificate& c);
/// Throws InvalidInput on missing keys or malformed values.
Certificate certificate_from_json(const Json& j);

// Current UTC time as RFC 3339, e.g. "2026-01-31T12:00:00Z".
std::string utc_timestamp();

/// Certificate fields plus "timestamp" and "version".
Json ledger_record(const Certificate& c, const std::string& timestamp);

// Tool version string.
std::string version();

}  // namespace mperron
