#include "unclab/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "unclab/bandlimited.hpp"
#include "unclab/circlepoly.hpp"
#include "unclab/errors.hpp"
#include "unclab/json_io.hpp"
#include "unclab/numeric.hpp"
#include "unclab/rearrange.hpp"
#include "unclab/rng.hpp"
#include "unclab/trigbound.hpp"

namespace unclab {

namespace {

// ---- params schema -------------------------------------------------------

void require_kind(const nlohmann::json& v, const char* key, const char* kind) {
  bool ok = false;
  const std::string k = kind;
  if (k == "int") ok = v.is_number_integer();
  else if (k == "number") ok = v.is_number();
  else if (k == "bool") ok = v.is_boolean();
  else if (k == "string") ok = v.is_string();
  else if (k == "object") ok = v.is_object();
  if (!ok)
    throw ConfigError(std::string("param \"") + key + "\" must be " + kind);
}

// Fills defaults and rejects unknown keys so typos fail loudly.
nlohmann::json validate_params(ClaimId claim, nlohmann::json params) {
  if (params.is_null()) params = nlohmann::json::object();
  if (!params.is_object()) throw ConfigError("params must be an object");
  struct Field {
    const char* key;
    const char* kind;
    nlohmann::json def;
  };
  std::vector<Field> fields;
  switch (claim) {
    case ClaimId::thm_discrete:
    case ClaimId::thm_improv:
      fields = {{"n_min", "int", 1},      {"n_max", "int", 8},
                {"n", "int", nullptr},    {"delta", "number", nullptr},
                {"r_max", "int", 3},      {"m", "int", nullptr},
                {"structured", "bool", false},
                {"family", "string", "any"}};
      break;
    case ClaimId::montgomery20:
      fields = {{"n_half_max", "int", 4},
                {"r_max", "int", 3},
                {"delta_max", "number", kPi},
                {"structured", "bool", false}};
      break;
    case ClaimId::lemma_h_bound:
      fields = {{"r_max", "int", 3},
                {"span", "number", kPi},
                {"structured", "bool", false}};
      break;
    case ClaimId::lemma_sin_cluster:
      fields = {{"n_max", "int", 3}, {"grid", "int", 2048},
                {"span", "number", kPi}};
      break;
    case ClaimId::thm_main_continuous:
    case ClaimId::thm_finite_continuous:
      fields = {{"W_max", "number", 1.0},  {"W", "number", nullptr},
                {"T", "number", nullptr},  {"r_max", "int", 2},
                {"nodes", "int", 64},      {"structured", "bool", false}};
      break;
  }
  nlohmann::json out = nlohmann::json::object();
  for (const auto& f : fields) {
    if (params.contains(f.key)) {
      require_kind(params[f.key], f.key, f.kind);
      out[f.key] = params[f.key];
      params.erase(f.key);
    } else if (!f.def.is_null()) {
      out[f.key] = f.def;
    }
  }
  if (out.contains("family")) {
    const std::string fam = out["family"].get<std::string>();
    if (fam != "any" && fam != "symmetric_even")
      throw ConfigError("param \"family\" must be any or symmetric_even");
  }
  if (params.contains("fixed_witness")) {
    require_kind(params["fixed_witness"], "fixed_witness", "object");
    out["fixed_witness"] = params["fixed_witness"];
    params.erase("fixed_witness");
  }
  if (!params.empty())
    throw ConfigError("unknown param key: " + params.begin().key());
  // Range sanity.
  auto positive_int = [&](const char* key) {
    if (out.contains(key) && out[key].get<std::int64_t>() < 1)
      throw ConfigError(std::string("param \"") + key + "\" must be >= 1");
  };
  for (const char* key : {"n_min", "n_max", "n", "r_max", "m", "n_half_max",
                          "grid", "nodes", "n_max"})
    positive_int(key);
  if (claim == ClaimId::lemma_sin_cluster &&
      out["n_max"].get<std::int64_t>() > 3)
    throw ConfigError("lemma_sin_cluster: n_max above 3 is not brute-forceable");
  return out;
}

// ---- generators ----------------------------------------------------------

Poly random_poly(Rng& rng, std::size_t degree) {
  std::vector<Poly::Coeff> c(degree + 1);
  for (auto& z : c) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    z = {re, im};
  }
  return Poly(std::move(c), /*keep_trailing_zeros=*/true);
}

nlohmann::json witness_thm_discrete(const nlohmann::json& p, Rng& rng,
                                    bool structured_trial) {
  const std::size_t n_min = p["n_min"].get<std::size_t>();
  const std::size_t n_max = std::max(n_min, p["n_max"].get<std::size_t>());
  std::size_t n = p.contains("n") ? p["n"].get<std::size_t>()
                                  : rng.uniform_int(n_min, n_max);
  const std::string family = p["family"].get<std::string>();
  Poly poly({Poly::Coeff{1.0, 0.0}});
  if (family == "symmetric_even" && !structured_trial) {
    const std::size_t n_half = std::max<std::size_t>(1, n / 2);
    std::vector<double> a(n_half + 1);
    for (auto& x : a) x = rng.uniform(-1.0, 1.0);
    poly = montgomery_embed(CosineSeries(a));
    n = poly.degree();
  }
  const double delta = p.contains("delta")
                           ? p["delta"].get<double>()
                           : rng.uniform(0.05, 1.0) * kPi /
                                 static_cast<double>(n);
  const std::size_t r_max = p["r_max"].get<std::size_t>();
  ArcUnion omega;
  if (structured_trial) {
    // Peak-aligned family: P = 1 + z^n, m arcs of length 2*delta/m centered
    // on peaks of |P|^2 (the D2 geometry generalized).
    std::vector<Poly::Coeff> c(n + 1, Poly::Coeff{0.0, 0.0});
    c.front() = c.back() = Poly::Coeff{1.0, 0.0};
    poly = Poly(std::move(c), true);
    const std::size_t m_cap = std::max<std::size_t>(1, std::min(r_max, n));
    const std::size_t m = p.contains("m")
                              ? p["m"].get<std::size_t>()
                              : rng.uniform_int(1, m_cap);
    if (m > n) throw ConfigError("structured generator: m > n");
    // m distinct peak indices out of n.
    std::vector<std::size_t> peaks(n);
    for (std::size_t i = 0; i < n; ++i) peaks[i] = i;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = rng.uniform_int(i, n - 1);
      std::swap(peaks[i], peaks[j]);
    }
    std::vector<ArcUnion::Arc> raw;
    const double len = 2.0 * delta / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double center =
          kTwoPi * static_cast<double>(peaks[i]) / static_cast<double>(n);
      raw.emplace_back(center - len / 2, center + len / 2);
    }
    omega = ArcUnion::from_raw(raw);
  } else {
    if (family == "any") poly = random_poly(rng, n);
    const std::size_t r = rng.uniform_int(1, r_max);
    omega = random_arcs(r, 2.0 * delta, rng.next_u64());
  }
  nlohmann::json w;
  w["poly"] = to_json(poly);
  w["omega"] = to_json(omega);
  return w;
}

nlohmann::json witness_montgomery20(const nlohmann::json& p, Rng& rng,
                                    bool structured_trial) {
  const std::size_t n_half = rng.uniform_int(1, p["n_half_max"].get<std::size_t>());
  std::vector<double> a(n_half + 1);
  if (structured_trial) {
    std::fill(a.begin(), a.end(), 0.0);
    a.front() = 1.0;
    a.back() = 1.0;
  } else {
    for (auto& x : a) x = rng.uniform(-1.0, 1.0);
  }
  const double delta_max = std::min(p["delta_max"].get<double>(), kPi);
  const double delta = rng.uniform(0.05, 1.0) * delta_max;
  ArcUnion omega;
  if (structured_trial) {
    const std::size_t m =
        std::max<std::size_t>(1, std::min(p["r_max"].get<std::size_t>(), n_half));
    std::vector<ArcUnion::Arc> raw;
    const double len = 2.0 * delta / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double center =
          kTwoPi * static_cast<double>(i) / static_cast<double>(n_half);
      raw.emplace_back(center - len / 2, center + len / 2);
    }
    omega = ArcUnion::from_raw(raw);
  } else {
    const std::size_t r = rng.uniform_int(1, p["r_max"].get<std::size_t>());
    omega = random_arcs(r, 2.0 * delta, rng.next_u64());
  }
  nlohmann::json w;
  w["cosine"] = nlohmann::json{{"a", a}};
  w["omega"] = to_json(omega);
  return w;
}

nlohmann::json witness_lemma_h(const nlohmann::json& p, Rng& rng,
                               bool structured_trial) {
  const std::size_t r = rng.uniform_int(1, p["r_max"].get<std::size_t>());
  const double span = p["span"].get<double>();
  std::vector<double> A(r), B(r);
  if (structured_trial) {
    // Aligned pairs (a, a+d) repeated r times; exceeds the claimed bound for
    // most d as soon as r >= 2.
    const double a = rng.uniform(-span, span);
    const double d = rng.uniform(0.0, span);
    std::fill(A.begin(), A.end(), a);
    std::fill(B.begin(), B.end(), a + d);
  } else {
    for (auto& x : A) x = rng.uniform(-span, span);
    for (auto& x : B) x = rng.uniform(-span, span);
  }
  return nlohmann::json{{"A", A}, {"B", B}};
}

nlohmann::json witness_sin_cluster(const nlohmann::json& p, Rng& rng) {
  const std::size_t n = rng.uniform_int(1, p["n_max"].get<std::size_t>());
  const double span = p["span"].get<double>();
  std::vector<double> x(n);
  for (auto& v : x) v = rng.uniform(-span, span);
  return nlohmann::json{{"x", x}, {"grid", p["grid"]}};
}

nlohmann::json witness_thm_main(const nlohmann::json& p, Rng& rng,
                                bool structured_trial) {
  const double W = p.contains("W")
                       ? p["W"].get<double>()
                       : rng.uniform(0.2, 1.0) * p["W_max"].get<double>();
  const double T = p.contains("T") ? p["T"].get<double>()
                                   : rng.uniform(0.1, 1.0) / W;
  const std::size_t N = p["nodes"].get<std::size_t>();
  if (structured_trial) {
    // Spectral rectangle pair at +-(W/2 - h) with a period-aligned second
    // time interval (the D3 geometry). The panel rule keeps the quadrature
    // exact on the rectangles.
    const double h = W / 100.0;
    const double c = W / 2.0 - h;
    const double t2 = 1.0 / (2.0 * c);
    const auto profile = [=](double omega) -> std::complex<double> {
      const double d = std::abs(omega);
      return (d >= c - h && d <= c + h) ? std::complex<double>{1.0, 0.0}
                                        : std::complex<double>{0.0, 0.0};
    };
    Spectrum s = make_spectrum_panels(W, {-(c - h), c - h}, profile, N);
    IntervalUnion tset = normalize_intervals(
        {{-T / 4, T / 4}, {t2 - T / 4, t2 + T / 4}});
    nlohmann::json w;
    w["spectrum"] = to_json(s);
    w["tset"] = to_json(tset);
    return w;
  }
  const std::size_t r = p["r_max"].get<std::size_t>() == 1
                            ? 1
                            : rng.uniform_int(1, p["r_max"].get<std::size_t>());
  IntervalUnion tset =
      random_union(r, T, {-1.5 / W, 1.5 / W}, rng.next_u64());
  // Smooth random profile: cubic in the normalized frequency.
  std::vector<std::complex<double>> coef(4);
  for (auto& z : coef)
    z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  const auto profile = [coef, W](double omega) {
    const double x = 2.0 * omega / W;
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  Spectrum s = make_spectrum(W, profile, N);
  nlohmann::json w;
  w["spectrum"] = to_json(s);
  w["tset"] = to_json(tset);
  return w;
}

std::size_t env_thread_cap() {
  const char* env = std::getenv("UNCLAB_THREADS");
  if (env == nullptr) return 0;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<std::size_t>(v) : 1;
}

}  // namespace

nlohmann::json Campaign::echo() const {
  return nlohmann::json{{"claim", to_string(claim)},
                        {"trials", trials},
                        {"seed", seed},
                        {"tol", tol},
                        {"hypothesis_override", hypothesis_override},
                        {"params", params}};
}

Campaign parse_campaign(const nlohmann::json& config) {
  if (!config.is_object()) throw ConfigError("campaign config must be an object");
  if (!config.contains("claim") || !config["claim"].is_string())
    throw ConfigError("campaign config needs a \"claim\" string");
  Campaign c;
  c.claim = claim_id_from_string(config["claim"].get<std::string>());
  if (config.contains("trials")) {
    if (!config["trials"].is_number_integer() ||
        config["trials"].get<std::int64_t>() < 1)
      throw ConfigError("\"trials\" must be an integer >= 1");
    c.trials = config["trials"].get<std::size_t>();
  }
  if (config.contains("seed")) {
    if (!config["seed"].is_number_integer())
      throw ConfigError("\"seed\" must be an integer");
    c.seed = config["seed"].get<std::uint64_t>();
  }
  if (config.contains("tol")) {
    if (!config["tol"].is_number() || !(config["tol"].get<double>() > 0.0))
      throw ConfigError("\"tol\" must be a positive number");
    c.tol = config["tol"].get<double>();
  }
  if (config.contains("hypothesis_override")) {
    if (!config["hypothesis_override"].is_boolean())
      throw ConfigError("\"hypothesis_override\" must be a boolean");
    c.hypothesis_override = config["hypothesis_override"].get<bool>();
  }
  c.params = validate_params(
      c.claim, config.contains("params") ? config["params"] : nlohmann::json());
  for (const auto& [key, value] : config.items()) {
    (void)value;
    if (key != "claim" && key != "trials" && key != "seed" && key != "tol" &&
        key != "hypothesis_override" && key != "params" && key != "grid")
      throw ConfigError("unknown campaign config key: " + key);
  }
  return c;
}

nlohmann::json generate_witness(const Campaign& c, std::size_t trial) {
  if (c.params.contains("fixed_witness")) return c.params["fixed_witness"];
  Rng rng = Rng::substream(c.seed, trial);
  const bool structured = c.params.contains("structured") &&
                          c.params["structured"].get<bool>() &&
                          trial % 2 == 0;
  switch (c.claim) {
    case ClaimId::thm_discrete:
      return witness_thm_discrete(c.params, rng, structured);
    case ClaimId::thm_improv:
      return witness_thm_discrete(c.params, rng, structured);
    case ClaimId::montgomery20:
      return witness_montgomery20(c.params, rng, structured);
    case ClaimId::lemma_h_bound:
      return witness_lemma_h(c.params, rng, structured);
    case ClaimId::lemma_sin_cluster:
      return witness_sin_cluster(c.params, rng);
    case ClaimId::thm_main_continuous:
    case ClaimId::thm_finite_continuous:
      return witness_thm_main(c.params, rng, structured);
  }
  throw ConfigError("generate_witness: unhandled claim");
}

ClaimReport check_instance(ClaimId id, const nlohmann::json& witness,
                           double tol, bool override_hypothesis) {
  switch (id) {
    case ClaimId::lemma_h_bound:
      return check_lemma_h(trig_config_from_json(witness), tol);
    case ClaimId::lemma_sin_cluster: {
      if (!witness.contains("x") || !witness.contains("grid"))
        throw MalformedInputError("lemma_sin_cluster witness needs x, grid");
      std::vector<double> x = witness["x"].get<std::vector<double>>();
      return check_lemma_sin_cluster(x, witness["grid"].get<std::size_t>(),
                                     tol);
    }
    case ClaimId::thm_discrete: {
      if (!witness.contains("poly") || !witness.contains("omega"))
        throw MalformedInputError("thm_discrete witness needs poly, omega");
      return check_thm_discrete(poly_from_json(witness["poly"]),
                                arc_union_from_json(witness["omega"]), tol,
                                override_hypothesis);
    }
    case ClaimId::thm_improv: {
      if (!witness.contains("poly") || !witness.contains("omega"))
        throw MalformedInputError("thm_improv witness needs poly, omega");
      return check_thm_improv(poly_from_json(witness["poly"]),
                              arc_union_from_json(witness["omega"]), tol,
                              override_hypothesis);
    }
    case ClaimId::montgomery20: {
      if (!witness.contains("cosine") || !witness.contains("omega"))
        throw MalformedInputError("montgomery20 witness needs cosine, omega");
      return check_montgomery20(cosine_series_from_json(witness["cosine"]),
                                arc_union_from_json(witness["omega"]), tol);
    }
    case ClaimId::thm_main_continuous:
    case ClaimId::thm_finite_continuous: {
      if (!witness.contains("spectrum") || !witness.contains("tset"))
        throw MalformedInputError("continuous witness needs spectrum, tset");
      return check_thm_main(spectrum_from_json(witness["spectrum"]),
                            interval_union_from_json(witness["tset"]), tol,
                            override_hypothesis, id);
    }
  }
  throw ConfigError("check_instance: unhandled claim");
}

CampaignReport run_campaign(const Campaign& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ClaimReport> reports(c.trials);
  std::vector<std::string> errors(c.trials);
  auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      try {
        const nlohmann::json w = generate_witness(c, t);
        reports[t] = check_instance(c.claim, w, c.tol, c.hypothesis_override);
      } catch (const std::exception& e) {
        errors[t] = e.what();
      }
    }
  };
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  const std::size_t cap = env_thread_cap();
  if (cap > 0) workers = std::min(workers, cap);
  workers = std::min(workers, c.trials);
  if (workers <= 1) {
    worker(0, c.trials);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (c.trials + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(c.trials, lo + chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  for (std::size_t t = 0; t < c.trials; ++t)
    if (!errors[t].empty())
      throw Error("trial " + std::to_string(t) + ": " + errors[t]);
  CampaignReport out;
  out.campaign = c;
  double sum = 0.0;
  out.stats.min = reports[0].margin;
  out.stats.max = reports[0].margin;
  for (std::size_t t = 0; t < c.trials; ++t) {
    const double m = reports[t].margin;
    sum += m;
    out.stats.min = std::min(out.stats.min, m);
    out.stats.max = std::max(out.stats.max, m);
    if (!reports[t].satisfied) out.violations.push_back(reports[t]);
  }
  out.stats.mean = sum / static_cast<double>(c.trials);
  out.worst_margin = out.stats.max;
  out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return out;
}

nlohmann::json CampaignReport::to_json(bool include_runtime) const {
  nlohmann::json viols = nlohmann::json::array();
  for (const auto& v : violations) viols.push_back(unclab::to_json(v));
  return nlohmann::json{
      {"campaign", campaign.echo()},
      {"violations", viols},
      {"worst_margin", worst_margin},
      {"stats", nlohmann::json{{"min", stats.min},
                               {"max", stats.max},
                               {"mean", stats.mean}}},
      {"runtime_ms", include_runtime ? runtime_ms : 0}};
}

bool recheck(const nlohmann::json& certificate) {
  ClaimReport cert = claim_report_from_json(certificate);
  // Certificates may record out-of-hypothesis explorations; recomputation
  // must not refuse them.
  ClaimReport fresh =
      check_instance(cert.claim_id, cert.witness, cert.tol, true);
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
  };
  if (!close(cert.lhs, fresh.lhs)) return false;
  if (!close(cert.rhs, fresh.rhs)) return false;
  if (!close(cert.margin, fresh.margin)) return false;
  if (cert.satisfied != (cert.margin <= cert.tol)) return false;
  return true;
}

std::vector<MapRow> validity_map(const nlohmann::json& config) {
  if (!config.is_object() || !config.contains("grid"))
    throw ConfigError("map config needs a \"grid\" block");
  const nlohmann::json& grid = config["grid"];
  for (const char* key : {"param1", "param2"})
    if (!grid.contains(key) || !grid[key].is_object() ||
        !grid[key].contains("name") || !grid[key].contains("values") ||
        !grid[key]["values"].is_array() || grid[key]["values"].empty())
      throw ConfigError("grid block needs param1/param2 with name and values");
  const std::string mode =
      grid.contains("mode") ? grid["mode"].get<std::string>() : "zip";
  const std::string name1 = grid["param1"]["name"].get<std::string>();
  const std::string name2 = grid["param2"]["name"].get<std::string>();
  const auto& v1 = grid["param1"]["values"];
  const auto& v2 = grid["param2"]["values"];
  std::vector<std::pair<nlohmann::json, nlohmann::json>> cells;
  if (mode == "zip") {
    if (v1.size() != v2.size())
      throw ConfigError("zip grid needs equal-length value lists");
    for (std::size_t i = 0; i < v1.size(); ++i) cells.emplace_back(v1[i], v2[i]);
  } else if (mode == "cross") {
    for (const auto& a : v1)
      for (const auto& b : v2) cells.emplace_back(a, b);
  } else {
    throw ConfigError("grid mode must be \"zip\" or \"cross\"");
  }
  std::vector<MapRow> rows;
  for (const auto& [a, b] : cells) {
    nlohmann::json cell_config = config;
    cell_config.erase("grid");
    if (!cell_config.contains("params") || cell_config["params"].is_null())
      cell_config["params"] = nlohmann::json::object();
    cell_config["params"][name1] = a;
    cell_config["params"][name2] = b;
    const Campaign campaign = parse_campaign(cell_config);
    const CampaignReport rep = run_campaign(campaign);
    MapRow row;
    row.claim = to_string(campaign.claim);
    row.param1 = a;
    row.param2 = b;
    row.trials = campaign.trials;
    row.violations = rep.violations.size();
    row.worst_margin = rep.worst_margin;
    row.runtime_ms = rep.runtime_ms;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string csv_value(const nlohmann::json& v) {
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number()) return format_double(v.get<double>());
  return v.dump();
}

}  // namespace

std::string map_rows_to_csv(const std::vector<MapRow>& rows,
                            bool include_runtime) {
  std::ostringstream out;
  out << "claim,param1,param2,trials,violations,worst_margin,runtime_ms\n";
  for (const auto& r : rows) {
    out << r.claim << ',' << csv_value(r.param1) << ',' << csv_value(r.param2)
        << ',' << r.trials << ',' << r.violations << ','
        << format_double(r.worst_margin) << ','
        << (include_runtime ? r.runtime_ms : 0) << '\n';
  }
  return out.str();
}

}  // namespace unclab
