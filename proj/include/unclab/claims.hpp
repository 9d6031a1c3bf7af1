#pragma once

#include <optional>
#include <string>

#include "vendor_json.hpp"

namespace unclab {

enum class ClaimId {
  lemma_sin_cluster,
  lemma_h_bound,
  thm_finite_continuous,
  thm_main_continuous,
  thm_discrete,
  thm_improv,
  montgomery20,
};

std::string to_string(ClaimId id);
ClaimId claim_id_from_string(const std::string& s);

// One checked inequality instance. The witness is the full instance (set +
// polynomial/spectrum/configuration + parameters) so both sides can be
// recomputed from the report alone; margin uses the lhs - rhs convention,
// so a positive margin is a violation.
struct ClaimReport {
  ClaimId claim_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
  bool satisfied = false;
  double tol = 0.0;
  nlohmann::json witness;
  // lhs/rhs, recorded by the rearrangement checkers (Montgomery's factor as a
  // measured quantity).
  std::optional<double> ratio;
};

inline ClaimReport make_report(ClaimId id, double lhs, double rhs, double tol,
                               nlohmann::json witness) {
  ClaimReport r;
  r.claim_id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.tol = tol;
  r.satisfied = r.margin <= tol;
  r.witness = std::move(witness);
  return r;
}

}  // namespace unclab
