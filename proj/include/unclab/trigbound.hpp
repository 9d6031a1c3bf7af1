#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "unclab/claims.hpp"

namespace unclab {

// Endpoint phases of the extremal trigonometric quantity: r pairs (A_p, B_p)
// with budget L = sum (B_p - A_p).
struct TrigConfig {
  std::vector<double> A;
  std::vector<double> B;

  double L() const;
  std::size_t r() const { return A.size(); }
};

TrigConfig make_trig_config(std::vector<double> A, std::vector<double> B);

// h = (sum sin B_p - sin A_p)^2 + (sum cos B_p - cos A_p)^2
//   = |sum (e^{iB_p} - e^{iA_p})|^2.
double h_value(const TrigConfig& c);

// The asserted maximum of h under the budget constraint: 4 sin^2(L/2).
double claimed_bound(double L);

// lhs = h_value, rhs = claimed_bound(L); no hypothesis gate (the lemma claims
// all real configurations).
ClaimReport check_lemma_h(const TrigConfig& c, double tol);

// Best configuration found by projected gradient ascent on h under the budget
// constraint, from the canonical equality point plus seeded random starts.
// Values above claimed_bound are reported verbatim.
std::pair<TrigConfig, double> multistart_max_h(std::size_t r, double L,
                                               std::size_t restarts,
                                               std::uint64_t seed);

// Number of distinct residues mod 2*pi after tol-clustering on the circle.
std::size_t residue_clusters(const std::vector<double>& x, double tol);

// Dense-grid maximum of |k sin y + (n-k) sin y'| over the two-residue-class
// parametrization with budget k*y + (n-k)*y' = L + 2*pi*m, |m| <= n.
double max_sum_sin_reduced(std::size_t n, double L, std::size_t grid);

// Diagnostic for the residue-clustering lemma: lhs = |sum sin x_i| for the
// given instance, rhs = max_sum_sin_reduced(n, sum x_i, grid).
ClaimReport check_lemma_sin_cluster(const std::vector<double>& x,
                                    std::size_t grid, double tol);

}  // namespace unclab
