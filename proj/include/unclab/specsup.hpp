#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "unclab/bandlimited.hpp"
#include "unclab/sets.hpp"

namespace unclab {

// Hermitian matrix whose Rayleigh quotient is the concentration of the
// polynomial/spectrum encoded by the vector; lambda_max is the operator norm
// of the time-limit-then-band-limit composition.
struct ConcMatrix {
  std::size_t dim = 0;
  std::vector<std::complex<double>> entries;  // row-major, dim x dim
  std::string origin;

  std::complex<double>& at(std::size_t i, std::size_t j) {
    return entries[i * dim + j];
  }
  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return entries[i * dim + j];
  }
};

struct EigenResult {
  double lambda = 0.0;
  std::vector<std::complex<double>> vector;
  double residual = 0.0;  // ||Mv - lambda v|| / ||v||
};

// (n+1)x(n+1) Hermitian Toeplitz matrix with
// M_{lm} = (1/2pi) int_Omega e^{i(m-l) theta} dtheta, so that
// v* M v = concentration(Poly(v), omega) for unit v.
ConcMatrix circle_conc_matrix(const ArcUnion& omega, std::size_t n);

// Nystrom form M_{jk} = sqrt(w_j w_k) K(node_k - node_j) on a Gauss grid of
// N nodes for bandwidth W; the Rayleigh quotient of (sqrt(w_j) f_j) is
// time_energy / norm_sq of the corresponding spectrum.
ConcMatrix continuous_conc_matrix(const IntervalUnion& tset, double W,
                                  std::size_t N);

// Dominant eigenpair by power iteration with a +1 spectral shift (spectrum
// sits in [0,1], so lambda_max + 1 is strictly dominant). Deterministic
// uniform positive start; the returned vector's largest-modulus entry is made
// real positive. Residual tolerance 1e-10, iteration cap 1e5.
EigenResult top_eigenpair(const ConcMatrix& m);

// lambda_max of circle_conc_matrix(omega, n): the supremum of concentration
// over polynomials of degree <= n.
double sup_concentration(const ArcUnion& omega, std::size_t n);

// Randomized probe of the extremal-set conjecture: restarts plus local moves
// over arc unions of measure 2*delta with at most r_max parts, maximizing
// sup_concentration. Returns (best set, its lambda, lambda - interval lambda).
std::tuple<ArcUnion, double, double> search_extremal_set(
    std::size_t n, double delta, std::size_t r_max, std::size_t budget,
    std::uint64_t seed);

}  // namespace unclab
