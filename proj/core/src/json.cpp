#include "mperron/json.hpp"

#include <ctime>

#include "mperron/errors.hpp"

namespace mperron {
namespace {

Integer integer_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw InvalidInput(std::string("certificate: '") + key + "' must be a decimal string");
  Integer v;
  if (v.set_str(j.at(key).get<std::string>(), 10) != 0) throw InvalidInput(std::string("certificate: bad integer in '") + key + "'");
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("certificate: missing '") + key + "'");
  return j.at(key);
}

SquarefreeStatus::Kind squarefree_kind(const std::string& s) {
  if (s == "Squarefree") return SquarefreeStatus::Kind::Squarefree;
  if (s == "NotSquarefree") return SquarefreeStatus::Kind::NotSquarefree;
  if (s == "Unknown") return SquarefreeStatus::Kind::Unknown;
  throw InvalidInput("certificate: unknown G_status '" + s + "'");
}

MonogenicityReport::Verdict verdict_from(const std::string& s) {
  if (s == "Monogenic") return MonogenicityReport::Verdict::Monogenic;
  if (s == "NotMonogenic") return MonogenicityReport::Verdict::NotMonogenic;
  if (s == "Unknown") return MonogenicityReport::Verdict::Unknown;
  throw InvalidInput("certificate: unknown monogenic verdict '" + s + "'");
}

}  // namespace

Json to_json(const IntPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.get_str());
  return out;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be an array of decimal strings");
  std::vector<Integer> c;
  for (const auto& e : j) {
    Integer v;
    if (!e.is_string() || v.set_str(e.get<std::string>(), 10) != 0) throw InvalidInput("bad polynomial coefficient");
    c.push_back(std::move(v));
  }
  return IntPoly(std::move(c));
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [q, e] : f.factors) factors.push_back(Json::array({q.get_str(), e}));
  return {{"factors", factors}, {"cofactor", f.cofactor.get_str()}, {"complete", f.complete}};
}

Json to_json(const LocalIndexVerdict& v) {
  Json out = {{"q", v.q.get_str()}, {"result", to_string(v.result)}, {"condition", v.condition}};
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

Json to_json(const MonogenicityReport& r) {
  Json locals = Json::array();
  for (const auto& v : r.locals) locals.push_back(to_json(v));
  Json out = {{"poly", to_json(r.poly)},
              {"disc", r.disc.get_str()},
              {"disc_factors", to_json(r.disc_factors)},
              {"locals", locals},
              {"verdict", to_string(r.verdict)},
              {"witness", nullptr}};
  if (r.verdict == MonogenicityReport::Verdict::NotMonogenic) out["witness"] = r.witness.get_str();
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

Json to_json(const Classification& c) {
  Json out = {{"poly", to_json(c.poly)},
              {"class", to_string(c.kind)},
              {"subclass", nullptr},
              {"lambda", nullptr},
              {"profile", nullptr},
              {"precision_bits", c.precision_bits()}};
  if (c.kind == Classification::Kind::Perron) out["subclass"] = to_string(c.subclass);
  if (c.lambda) out["lambda"] = c.lambda->to_string(kLambdaDigits);
  if (c.kind != Classification::Kind::NotIrreducible) {
    out["profile"] = {{"inside", c.profile.inside}, {"on", c.profile.on}, {"outside", c.profile.outside}};
  }
  return out;
}

Json to_json(const Certificate& c) {
  Json out = {{"n", c.n},
              {"a", c.a.get_str()},
              {"p", c.p.get_str()},
              {"poly", to_json(c.poly)},
              {"disc", c.disc.get_str()},
              {"G", c.G.get_str()},
              {"G_status", to_string(c.G_status)},
              {"irreducible", c.irreducible},
              {"monogenic", nullptr},
              {"class", c.class_name},
              {"lambda", nullptr},
              {"theorem_applicable", c.theorem_applicable},
              {"conclusion", c.conclusion}};
  if (c.monogenic) out["monogenic"] = to_string(*c.monogenic);
  if (c.lambda) out["lambda"] = *c.lambda;
  return out;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("certificate must be a JSON object");
  Certificate c;
  try {
    c.n = field(j, "n").get<unsigned>();
    c.a = integer_from_json(j, "a");
    c.p = integer_from_json(j, "p");
    c.poly = poly_from_json(field(j, "poly"));
    c.disc = integer_from_json(j, "disc");
    c.G = integer_from_json(j, "G");
    c.G_status = squarefree_kind(field(j, "G_status").get<std::string>());
    c.irreducible = field(j, "irreducible").get<bool>();
    if (!field(j, "monogenic").is_null()) c.monogenic = verdict_from(j.at("monogenic").get<std::string>());
    c.class_name = field(j, "class").get<std::string>();
    if (!field(j, "lambda").is_null()) c.lambda = j.at("lambda").get<std::string>();
    c.theorem_applicable = field(j, "theorem_applicable").get<bool>();
    c.conclusion = field(j, "conclusion").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("certificate: ") + e.what());
  }
  return c;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string version() { return MPERRON_VERSION; }

Json ledger_record(const Certificate& c, const std::string& timestamp) {
  Json out = to_json(c);
  out["timestamp"] = timestamp;
  out["version"] = version();
  return out;
}

}  // namespace mperron
