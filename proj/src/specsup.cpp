#include "unclab/specsup.hpp"

#include <algorithm>
#include <cmath>

#include "unclab/errors.hpp"
#include "unclab/numeric.hpp"
#include "unclab/rng.hpp"

namespace unclab {

ConcMatrix circle_conc_matrix(const ArcUnion& omega, std::size_t n) {
  ConcMatrix m;
  m.dim = n + 1;
  m.entries.assign(m.dim * m.dim, {0.0, 0.0});
  m.origin = "circle";
  // Toeplitz: entry depends on m - l only.
  std::vector<std::complex<double>> diag(n + 1);
  for (std::size_t nu = 0; nu <= n; ++nu) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [a, b] : omega.arcs()) {
      const double len = b - a;
      s += std::polar(len * sinc(0.5 * static_cast<double>(nu) * len),
                      static_cast<double>(nu) * 0.5 * (a + b));
    }
    diag[nu] = s / kTwoPi;
  }
  for (std::size_t l = 0; l <= n; ++l)
    for (std::size_t mm = 0; mm <= n; ++mm)
      m.at(l, mm) = mm >= l ? diag[mm - l] : std::conj(diag[l - mm]);
  return m;
}

ConcMatrix continuous_conc_matrix(const IntervalUnion& tset, double W,
                                  std::size_t N) {
  if (W <= 0.0)
    throw MalformedInputError("continuous_conc_matrix: W must be > 0");
  if (N < 2) throw MalformedInputError("continuous_conc_matrix: need N >= 2");
  GaussRule rule = gauss_legendre(N, -W / 2, W / 2);
  ConcMatrix m;
  m.dim = N;
  m.entries.assign(N * N, {0.0, 0.0});
  m.origin = "continuous";
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = 0; k < N; ++k)
      m.at(j, k) = std::sqrt(rule.weights[j] * rule.weights[k]) *
                   time_kernel(rule.nodes[k] - rule.nodes[j], tset);
  return m;
}

namespace {

void matvec(const ConcMatrix& m, const std::vector<std::complex<double>>& v,
            std::vector<std::complex<double>>& out) {
  out.assign(m.dim, {0.0, 0.0});
  for (std::size_t i = 0; i < m.dim; ++i) {
    std::complex<double> acc{0.0, 0.0};
    const std::complex<double>* row = &m.entries[i * m.dim];
    for (std::size_t j = 0; j < m.dim; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
}

double norm2(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  for (const auto& z : v) s += abs_sq(z);
  return std::sqrt(s);
}

}  // namespace

EigenResult top_eigenpair(const ConcMatrix& m) {
  if (m.dim < 1) throw MalformedInputError("top_eigenpair: empty matrix");
  const std::size_t dim = m.dim;
  std::vector<std::complex<double>> v(dim,
                                      {1.0 / std::sqrt(double(dim)), 0.0});
  std::vector<std::complex<double>> mv(dim), shifted(dim);
  double lambda = 0.0;
  double best_residual = 1e300;
  const std::size_t cap = 100000;
  for (std::size_t iter = 0; iter < cap; ++iter) {
    matvec(m, v, mv);
    std::complex<double> rayleigh{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) rayleigh += std::conj(v[i]) * mv[i];
    lambda = rayleigh.real();
    double res = 0.0;
    for (std::size_t i = 0; i < dim; ++i) res += abs_sq(mv[i] - lambda * v[i]);
    res = std::sqrt(res);
    best_residual = std::min(best_residual, res);
    if (res < 1e-10) {
      // Fix the global phase: largest-modulus entry real positive.
      std::size_t imax = 0;
      double amax = -1.0;
      for (std::size_t i = 0; i < dim; ++i) {
        const double a = std::abs(v[i]);
        if (a > amax) {
          amax = a;
          imax = i;
        }
      }
      if (amax > 0.0) {
        const std::complex<double> phase = v[imax] / amax;
        for (auto& z : v) z /= phase;
      }
      EigenResult r;
      r.lambda = lambda;
      r.vector = std::move(v);
      r.residual = res;
      return r;
    }
    for (std::size_t i = 0; i < dim; ++i) shifted[i] = mv[i] + v[i];
    const double nrm = norm2(shifted);
    if (nrm == 0.0)
      throw ConvergenceError("top_eigenpair: shifted iterate vanished", res);
    for (std::size_t i = 0; i < dim; ++i) v[i] = shifted[i] / nrm;
  }
  throw ConvergenceError("top_eigenpair: iteration cap exceeded",
                         best_residual);
}

double sup_concentration(const ArcUnion& omega, std::size_t n) {
  return top_eigenpair(circle_conc_matrix(omega, n)).lambda;
}

namespace {

// Arcs as (center, length) with exact total; rebuilt as an ArcUnion on eval.
struct Candidate {
  std::vector<double> centers;
  std::vector<double> lengths;

  ArcUnion build(double total) const {
    double lsum = 0.0;
    for (double l : lengths) lsum += l;
    std::vector<ArcUnion::Arc> raw;
    raw.reserve(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
      const double len = lengths[i] * total / lsum;  // renormalize exactly
      raw.emplace_back(centers[i] - len / 2, centers[i] + len / 2);
    }
    return ArcUnion::from_raw(raw);
  }
};

}  // namespace

std::tuple<ArcUnion, double, double> search_extremal_set(
    std::size_t n, double delta, std::size_t r_max, std::size_t budget,
    std::uint64_t seed) {
  if (r_max < 1)
    throw MalformedInputError("search_extremal_set: r_max >= 1");
  if (delta <= 0.0 || 2.0 * delta > kTwoPi)
    throw MalformedInputError("search_extremal_set: need 0 < 2*delta <= 2pi");
  const double total = 2.0 * delta;
  const ArcUnion interval = ArcUnion::centered_interval(delta);
  const double interval_lambda = sup_concentration(interval, n);
  ArcUnion best_set = interval;
  double best_lambda = interval_lambda;
  Candidate current;
  double current_lambda = -1.0;
  bool have_current = false;
  Rng rng(seed);
  for (std::size_t eval = 0; eval < budget; ++eval) {
    Candidate cand;
    const bool restart = !have_current || eval % 16 == 0;
    if (restart) {
      const std::size_t r = rng.uniform_int(1, r_max);
      cand.centers.resize(r);
      cand.lengths.resize(r);
      for (auto& c : cand.centers) c = rng.uniform(0.0, kTwoPi);
      for (auto& l : cand.lengths) l = rng.uniform_open();
    } else {
      cand = current;
      const std::size_t move = rng.uniform_int(0, 1);
      const std::size_t i = rng.uniform_int(0, cand.centers.size() - 1);
      if (move == 0 || cand.centers.size() == 1) {
        const double scale = rng.uniform_int(0, 1) == 0 ? 0.1 : 0.01;
        cand.centers[i] += scale * rng.uniform(-1.0, 1.0);
      } else {
        std::size_t j = rng.uniform_int(0, cand.centers.size() - 2);
        if (j >= i) ++j;
        const double amount = rng.uniform_open() * cand.lengths[i];
        cand.lengths[i] -= amount;
        cand.lengths[j] += amount;
        if (cand.lengths[i] < 1e-9 * total) {
          cand.lengths.erase(cand.lengths.begin() + i);
          cand.centers.erase(cand.centers.begin() + i);
        }
      }
    }
    const ArcUnion set = cand.build(total);
    // Overlapping arcs merge and lose measure; such moves are rejected.
    if (std::abs(set.measure() - total) > 1e-9 * total) continue;
    const double lambda = sup_concentration(set, n);
    if (restart || lambda > current_lambda + 1e-12) {
      current = cand;
      current_lambda = lambda;
      have_current = true;
    }
    if (lambda > best_lambda + 1e-12) {
      best_lambda = lambda;
      best_set = set;
    }
  }
  return {best_set, best_lambda, best_lambda - interval_lambda};
}

}  // namespace unclab
