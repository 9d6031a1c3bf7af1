#include "unclab/json_io.hpp"

#include <charconv>

#include "unclab/bandlimited.hpp"
#include "unclab/errors.hpp"
#include "unclab/rearrange.hpp"
#include "unclab/trigbound.hpp"

namespace unclab {

std::string to_string(ClaimId id) {
  switch (id) {
    case ClaimId::lemma_sin_cluster: return "lemma_sin_cluster";
    case ClaimId::lemma_h_bound: return "lemma_h_bound";
    case ClaimId::thm_finite_continuous: return "thm_finite_continuous";
    case ClaimId::thm_main_continuous: return "thm_main_continuous";
    case ClaimId::thm_discrete: return "thm_discrete";
    case ClaimId::thm_improv: return "thm_improv";
    case ClaimId::montgomery20: return "montgomery20";
  }
  throw ConfigError("unknown claim id");
}

ClaimId claim_id_from_string(const std::string& s) {
  if (s == "lemma_sin_cluster") return ClaimId::lemma_sin_cluster;
  if (s == "lemma_h_bound") return ClaimId::lemma_h_bound;
  if (s == "thm_finite_continuous") return ClaimId::thm_finite_continuous;
  if (s == "thm_main_continuous") return ClaimId::thm_main_continuous;
  if (s == "thm_discrete") return ClaimId::thm_discrete;
  if (s == "thm_improv") return ClaimId::thm_improv;
  if (s == "montgomery20") return ClaimId::montgomery20;
  throw ConfigError("unknown claim id: " + s);
}

namespace {

std::vector<double> doubles_from(const nlohmann::json& j, const char* what) {
  if (!j.is_array())
    throw MalformedInputError(std::string("expected array for ") + what);
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number())
      throw MalformedInputError(std::string("expected numbers in ") + what);
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::pair<double, double>> pairs_from(const nlohmann::json& j,
                                                  const char* what) {
  if (!j.is_array())
    throw MalformedInputError(std::string("expected array for ") + what);
  std::vector<std::pair<double, double>> out;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number())
      throw MalformedInputError(std::string("expected [a,b] pairs in ") + what);
    out.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const IntervalUnion& u) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& [a, b] : u.parts()) parts.push_back({a, b});
  return nlohmann::json{{"parts", parts}};
}

IntervalUnion interval_union_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("parts"))
    throw MalformedInputError("IntervalUnion JSON needs a \"parts\" field");
  return normalize_intervals(pairs_from(j.at("parts"), "parts"));
}

nlohmann::json to_json(const ArcUnion& u) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [a, b] : u.arcs()) arcs.push_back({a, b});
  return nlohmann::json{{"arcs", arcs}};
}

ArcUnion arc_union_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("arcs"))
    throw MalformedInputError("ArcUnion JSON needs an \"arcs\" field");
  return ArcUnion::from_raw(pairs_from(j.at("arcs"), "arcs"));
}

nlohmann::json to_json(const Poly& p) {
  std::vector<double> re, im;
  re.reserve(p.coeffs().size());
  im.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return nlohmann::json{{"re", re}, {"im", im}};
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw MalformedInputError("Poly JSON needs \"re\" and \"im\" fields");
  const auto re = doubles_from(j.at("re"), "re");
  const auto im = doubles_from(j.at("im"), "im");
  if (re.size() != im.size())
    throw MalformedInputError("Poly JSON: re/im length mismatch");
  std::vector<Poly::Coeff> c(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) c[k] = {re[k], im[k]};
  return Poly(std::move(c), /*keep_trailing_zeros=*/true);
}

nlohmann::json to_json(const Spectrum& s) {
  std::vector<double> re, im;
  re.reserve(s.size());
  im.reserve(s.size());
  for (const auto& v : s.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return nlohmann::json{{"W", s.W()},
                        {"nodes", s.nodes()},
                        {"weights", s.weights()},
                        {"re", re},
                        {"im", im}};
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
  for (const char* key : {"W", "nodes", "weights", "re", "im"})
    if (!j.is_object() || !j.contains(key))
      throw MalformedInputError(std::string("Spectrum JSON needs \"") + key +
                                "\"");
  const auto nodes = doubles_from(j.at("nodes"), "nodes");
  const auto weights = doubles_from(j.at("weights"), "weights");
  const auto re = doubles_from(j.at("re"), "re");
  const auto im = doubles_from(j.at("im"), "im");
  if (re.size() != im.size() || re.size() != nodes.size())
    throw MalformedInputError("Spectrum JSON: array length mismatch");
  std::vector<std::complex<double>> values(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) values[k] = {re[k], im[k]};
  return Spectrum(j.at("W").get<double>(), nodes, weights, std::move(values));
}

nlohmann::json to_json(const TrigConfig& c) {
  return nlohmann::json{{"A", c.A}, {"B", c.B}};
}

TrigConfig trig_config_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    throw MalformedInputError("TrigConfig JSON needs \"A\" and \"B\"");
  return make_trig_config(doubles_from(j.at("A"), "A"),
                          doubles_from(j.at("B"), "B"));
}

nlohmann::json to_json(const CosineSeries& c) {
  return nlohmann::json{{"a", c.a()}};
}

CosineSeries cosine_series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a"))
    throw MalformedInputError("CosineSeries JSON needs an \"a\" field");
  return CosineSeries(doubles_from(j.at("a"), "a"));
}

nlohmann::json to_json(const ClaimReport& r) {
  nlohmann::json j{{"claim_id", to_string(r.claim_id)},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"margin", r.margin},
                   {"satisfied", r.satisfied},
                   {"tol", r.tol},
                   {"witness", r.witness}};
  if (r.ratio) j["ratio"] = *r.ratio;
  return j;
}

ClaimReport claim_report_from_json(const nlohmann::json& j) {
  for (const char* key :
       {"claim_id", "lhs", "rhs", "margin", "satisfied", "tol", "witness"})
    if (!j.is_object() || !j.contains(key))
      throw MalformedInputError(std::string("ClaimReport JSON needs \"") + key +
                                "\"");
  ClaimReport r;
  r.claim_id = claim_id_from_string(j.at("claim_id").get<std::string>());
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.margin = j.at("margin").get<double>();
  r.satisfied = j.at("satisfied").get<bool>();
  r.tol = j.at("tol").get<double>();
  r.witness = j.at("witness");
  if (j.contains("ratio")) r.ratio = j.at("ratio").get<double>();
  return r;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace unclab
