#pragma once

#include <complex>
#include <vector>

#include "unclab/claims.hpp"
#include "unclab/sets.hpp"

namespace unclab {

// Complex polynomial P(z) = a_0 + a_1 z + ... + a_n z^n by its coefficients.
class Poly {
 public:
  using Coeff = std::complex<double>;

  // Trailing zero coefficients are trimmed unless keep_trailing_zeros is set
  // (rearrangements need to preserve positions). Always holds >= 1 entry.
  explicit Poly(std::vector<Coeff> coeffs, bool keep_trailing_zeros = false);

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const;

  Coeff eval(std::complex<double> z) const;

 private:
  std::vector<Coeff> coeffs_;
};

// Exact closed form for the energy over an arc union:
//   int_Omega |P(e^{i theta})|^2 dtheta
//     = sum_{l,m} a_l conj(a_m) sum_p (b-a) e^{i(l-m)(a+b)/2} S((l-m)(b-a)/2)
// The phase-symmetric sinc form avoids cancellation on small arcs. The
// imaginary residue of the double sum must stay below 1e-10 * norm_sq.
double arc_energy(const Poly& p, const ArcUnion& omega);

// 2*pi * sum |a_k|^2; equals arc_energy over the full circle.
double norm_sq(const Poly& p);

// arc_energy / norm_sq, in [0, 1]. Throws DegenerateInputError on zero P.
double concentration(const Poly& p, const ArcUnion& omega);

// Coefficients replaced by their moduli (the paper's Q).
Poly modulus_poly(const Poly& p);

// Coefficients a_k e^{-i k theta}; moves the polynomial's mass by +theta on
// the circle: arc_energy(rotate_poly(p, theta), omega.rotated(theta)) equals
// arc_energy(p, omega).
Poly rotate_poly(const Poly& p, double theta);

// Checks int_Omega |P|^2 <= int_I |Q|^2 with Q = modulus_poly(P) and
// I = (-delta, delta), delta = measure(omega)/2, under the hypothesis
// n * delta <= pi (refused without override).
ClaimReport check_thm_discrete(const Poly& p, const ArcUnion& omega,
                               double tol, bool override_hypothesis = false);

}  // namespace unclab
