#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unclab/claims.hpp"
#include "unclab/vendor_json.hpp"

namespace unclab {

// A claim-checking experiment: `trials` instances drawn from per-trial
// substreams of `seed`, dispatched to the claim's checker. `params` is the
// claim-specific generator block, validated against the shipped schema.
struct Campaign {
  ClaimId claim;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  bool hypothesis_override = false;
  nlohmann::json params;  // defaults filled in by parse_campaign

  nlohmann::json echo() const;
};

Campaign parse_campaign(const nlohmann::json& config);

struct CampaignStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct CampaignReport {
  Campaign campaign;
  std::vector<ClaimReport> violations;  // margin > tol, in trial order
  double worst_margin = 0.0;
  CampaignStats stats;
  std::int64_t runtime_ms = 0;  // measured; serialized as 0 by default

  // include_runtime keeps artifacts byte-deterministic unless timings are
  // explicitly requested.
  nlohmann::json to_json(bool include_runtime = false) const;
};

// Runs the campaign. Trials may be evaluated in parallel (UNCLAB_THREADS
// caps the worker count); reports are assembled in trial order so the output
// is independent of scheduling.
CampaignReport run_campaign(const Campaign& c);

// Builds one instance witness for the campaign's claim. Structured families
// (peak-aligned arcs, spectral rectangle pairs, aligned phase pairs) realize
// the known failure geometry; random families cover the hypothesis region.
nlohmann::json generate_witness(const Campaign& c, std::size_t trial);

// Recomputes a claim instance from its witness payload.
ClaimReport check_instance(ClaimId id, const nlohmann::json& witness,
                           double tol, bool override_hypothesis);

// True iff the certificate's lhs/rhs/margin recompute from its witness to
// 1e-9 and the satisfied flag is consistent with margin <= tol.
bool recheck(const nlohmann::json& certificate);

struct MapRow {
  std::string claim;
  nlohmann::json param1;
  nlohmann::json param2;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
  std::int64_t runtime_ms = 0;
};

// Runs the campaign template over a parameter grid; one row per cell.
// config = campaign config plus a "grid" block naming two parameters and
// their value lists (mode "zip" pairs them, "cross" takes the product).
std::vector<MapRow> validity_map(const nlohmann::json& config);

std::string map_rows_to_csv(const std::vector<MapRow>& rows,
                            bool include_runtime = false);

}  // namespace unclab
