// unclab: verification-and-falsification lab for time-frequency
// concentration inequalities. Subcommands: check, campaign, map, recheck,
// search. Exit codes: 0 = no violations, 2 = violations found, 1 = error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "unclab/campaign.hpp"
#include "unclab/errors.hpp"
#include "unclab/json_io.hpp"
#include "unclab/specsup.hpp"
#include "unclab/vendor_json.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
  nlohmann::json j;
  try {
    if (path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(path);
      if (!in) throw unclab::ConfigError("cannot open " + path);
      in >> j;
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw unclab::ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw unclab::ConfigError("cannot write " + out_path);
    out << text;
  }
}

struct CommonOpts {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<double> tol;
  std::optional<std::size_t> nodes;
  bool override_hypothesis = false;
  bool timings = false;
  std::string out_path;
  std::string format = "json";
};

void apply_overrides(nlohmann::json& config, const CommonOpts& o) {
  if (o.seed) config["seed"] = *o.seed;
  if (o.trials) config["trials"] = *o.trials;
  if (o.tol) config["tol"] = *o.tol;
  if (o.override_hypothesis) config["hypothesis_override"] = true;
  if (o.nodes) {
    if (!config.contains("params") || config["params"].is_null())
      config["params"] = nlohmann::json::object();
    config["params"]["nodes"] = *o.nodes;
  }
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_trials = true) {
  cmd->add_option("--seed", o.seed, "Override the config seed");
  if (with_trials) cmd->add_option("--trials", o.trials, "Override trials");
  cmd->add_option("--tol", o.tol, "Override the margin tolerance");
  cmd->add_option("--nodes", o.nodes,
                  "Override quadrature node count (continuous claims)");
  cmd->add_flag("--override-hypothesis", o.override_hypothesis,
                "Check instances outside the stated hypothesis");
  cmd->add_flag("--timings", o.timings,
                "Include measured runtime_ms in artifacts (breaks "
                "byte-determinism between runs)");
  cmd->add_option("--out", o.out_path, "Write output to a file");
  cmd->add_option("--format", o.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unclab: concentration-inequality verification lab"};
  app.require_subcommand(1);

  std::string input_path = "-";
  CommonOpts check_opts, campaign_opts, map_opts, search_opts;

  auto* check_cmd = app.add_subcommand(
      "check", "Check one claim instance from JSON (file or stdin)");
  check_cmd->add_option("input", input_path, "Instance JSON (- for stdin)");
  add_common(check_cmd, check_opts, /*with_trials=*/false);

  std::string campaign_path;
  auto* campaign_cmd =
      app.add_subcommand("campaign", "Run a campaign from a config file");
  campaign_cmd->add_option("config", campaign_path, "Campaign config JSON")
      ->required();
  add_common(campaign_cmd, campaign_opts);

  std::string map_path;
  auto* map_cmd = app.add_subcommand(
      "map", "Run a campaign template over a parameter grid (CSV out)");
  map_cmd->add_option("config", map_path, "Map config JSON")->required();
  add_common(map_cmd, map_opts);
  map_opts.format = "csv";

  std::string cert_path;
  auto* recheck_cmd = app.add_subcommand(
      "recheck", "Recompute a certificate from its witness");
  recheck_cmd->add_option("certificate", cert_path,
                          "ClaimReport JSON (- for stdin)")
      ->required();

  std::size_t s_degree = 2, s_rmax = 2, s_budget = 200;
  double s_delta = 0.5;
  std::uint64_t s_seed = 0;
  auto* search_cmd = app.add_subcommand(
      "search", "Randomized extremal-set search (conjecture probe)");
  search_cmd->add_option("--degree", s_degree, "Polynomial degree bound");
  search_cmd->add_option("--delta", s_delta, "Half-measure of the set")
      ->required();
  search_cmd->add_option("--rmax", s_rmax, "Maximum number of arcs");
  search_cmd->add_option("--budget", s_budget, "Evaluation budget");
  search_cmd->add_option("--seed", s_seed, "Search seed");
  search_cmd->add_option("--out", search_opts.out_path, "Write output to file");

  try {
    app.parse(argc, argv);

    if (*check_cmd) {
      nlohmann::json instance = load_json(input_path);
      if (!instance.contains("claim") || !instance.contains("witness"))
        throw unclab::ConfigError(
            "check input needs \"claim\" and \"witness\" fields");
      const unclab::ClaimId id = unclab::claim_id_from_string(
          instance["claim"].get<std::string>());
      double tol = check_opts.tol.value_or(
          instance.value("tol", 1e-10));
      const bool override_h =
          check_opts.override_hypothesis ||
          instance.value("hypothesis_override", false);
      const unclab::ClaimReport report =
          unclab::check_instance(id, instance["witness"], tol, override_h);
      write_output(unclab::to_json(report).dump(2), check_opts.out_path);
      return report.satisfied ? 0 : 2;
    }

    if (*campaign_cmd) {
      if (campaign_opts.format == "csv")
        throw unclab::ConfigError(
            "campaign reports are JSON; csv applies to map");
      nlohmann::json config = load_json(campaign_path);
      apply_overrides(config, campaign_opts);
      const unclab::Campaign campaign = unclab::parse_campaign(config);
      const unclab::CampaignReport report = unclab::run_campaign(campaign);
      std::cerr << "campaign " << unclab::to_string(campaign.claim) << ": "
                << report.violations.size() << "/" << campaign.trials
                << " violations, worst margin "
                << unclab::format_double(report.worst_margin) << ", "
                << report.runtime_ms << " ms\n";
      write_output(report.to_json(campaign_opts.timings).dump(2),
                   campaign_opts.out_path);
      return report.violations.empty() ? 0 : 2;
    }

    if (*map_cmd) {
      nlohmann::json config = load_json(map_path);
      apply_overrides(config, map_opts);
      const std::vector<unclab::MapRow> rows = unclab::validity_map(config);
      std::size_t total_viol = 0;
      for (const auto& r : rows) total_viol += r.violations;
      if (map_opts.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
          arr.push_back(nlohmann::json{
              {"claim", r.claim},
              {"param1", r.param1},
              {"param2", r.param2},
              {"trials", r.trials},
              {"violations", r.violations},
              {"worst_margin", r.worst_margin},
              {"runtime_ms", map_opts.timings ? r.runtime_ms : 0}});
        }
        write_output(arr.dump(2), map_opts.out_path);
      } else {
        write_output(unclab::map_rows_to_csv(rows, map_opts.timings),
                     map_opts.out_path);
      }
      return total_viol == 0 ? 0 : 2;
    }

    if (*recheck_cmd) {
      const nlohmann::json cert = load_json(cert_path);
      const bool ok = unclab::recheck(cert);
      std::cout << (ok ? "valid" : "invalid") << '\n';
      return ok ? 0 : 2;
    }

    if (*search_cmd) {
      const auto [set, lambda, gap] = unclab::search_extremal_set(
          s_degree, s_delta, s_rmax, s_budget, s_seed);
      nlohmann::json out{{"set", unclab::to_json(set)},
                         {"lambda", lambda},
                         {"interval_lambda", lambda - gap},
                         {"gap", gap},
                         {"seed", s_seed},
                         {"budget", s_budget}};
      write_output(out.dump(2), search_opts.out_path);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
