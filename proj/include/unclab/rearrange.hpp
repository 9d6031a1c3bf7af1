#pragma once

#include <utility>
#include <vector>

#include "unclab/circlepoly.hpp"
#include "unclab/claims.hpp"

namespace unclab {

// Toeplitz weights of the centered-interval energy form:
// s_0 = 2*delta, s_nu = 2*sin(nu*delta)/nu. Under n*delta <= pi they are
// nonnegative and decreasing, which is what the rearrangement lemma needs.
struct ToeplitzWeights {
  std::size_t n = 0;
  double delta = 0.0;
  std::vector<double> s;  // s_0 .. s_n
};

ToeplitzWeights toeplitz_weights(std::size_t n, double delta);

// Coefficients of f(x) = sum a_k cos(k x).
class CosineSeries {
 public:
  explicit CosineSeries(std::vector<double> a);
  const std::vector<double>& a() const { return a_; }

 private:
  std::vector<double> a_;
};

// Central rearrangement: largest value at the center index, then alternating
// outward (right first for even n; the odd-n order starts ceil(n/2),
// floor(n/2), ceil(n/2)+1, floor(n/2)-1, ...). Equal values keep input order.
Poly hlp_order(const std::vector<double>& coeffs);

// Centered-interval energy through the Toeplitz weights; an implementation of
// int_{-delta}^{delta} |P|^2 independent of arc_energy, used as a cross-check.
double interval_energy_form(const Poly& p, double delta);

// Exhaustive maximum of interval_energy_form over coefficient permutations.
// Guarded at length 8 (40320 permutations).
std::pair<Poly, double> brute_force_best_permutation(
    const std::vector<double>& coeffs, double delta);

// Symmetric polynomial of degree 2n with |f(x)|^2 = |P(e^{ix})|^2:
// P(z) = (a_n + a_{n-1} z + ... + 2 a_0 z^n + ... + a_n z^{2n}) / 2.
Poly montgomery_embed(const CosineSeries& f);

// Checks int_Omega |P|^2 <= int_I |P*|^2 with P* = hlp_order applied to the
// coefficient moduli, I = (-delta, delta), under n*delta <= pi. The report
// carries ratio = lhs/rhs.
ClaimReport check_thm_improv(const Poly& p, const ArcUnion& omega, double tol,
                             bool override_hypothesis = false);

// Montgomery's original factor-20 inequality for symmetric even-degree
// polynomials built from a cosine series; no size hypothesis. The comparison
// polynomial re-embeds the moduli sorted decreasingly, and the report records
// ratio = lhs / int_I |P**|^2 against the factor-20 ceiling.
ClaimReport check_montgomery20(const CosineSeries& f, const ArcUnion& omega,
                               double tol);

}  // namespace unclab
