#include "unclab/bandlimited.hpp"

#include <algorithm>
#include <cmath>

#include "unclab/errors.hpp"
#include "unclab/json_io.hpp"
#include "unclab/numeric.hpp"

namespace unclab {

Spectrum::Spectrum(double W, std::vector<double> nodes,
                   std::vector<double> weights,
                   std::vector<std::complex<double>> values)
    : W_(W),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      values_(std::move(values)) {
  if (W_ <= 0.0) throw MalformedInputError("Spectrum: W must be > 0");
  if (nodes_.size() < 2 || nodes_.size() != weights_.size() ||
      nodes_.size() != values_.size())
    throw MalformedInputError("Spectrum: inconsistent node/weight/value sizes");
  double wsum = 0.0;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (nodes_[j] < -W_ / 2 || nodes_[j] > W_ / 2)
      throw MalformedInputError("Spectrum: node outside [-W/2, W/2]");
    if (j > 0 && !(nodes_[j] > nodes_[j - 1]))
      throw MalformedInputError("Spectrum: nodes must strictly increase");
    if (!(weights_[j] > 0.0))
      throw MalformedInputError("Spectrum: weights must be positive");
    wsum += weights_[j];
  }
  if (std::abs(wsum - W_) > 1e-12 * W_)
    throw MalformedInputError("Spectrum: weights do not sum to W");
}

double Spectrum::norm_sq() const {
  double s = 0.0;
  for (std::size_t j = 0; j < values_.size(); ++j)
    s += weights_[j] * abs_sq(values_[j]);
  return s;
}

bool Spectrum::is_zero() const {
  for (const auto& v : values_)
    if (v != std::complex<double>{0.0, 0.0}) return false;
  return true;
}

Spectrum make_spectrum(double W, const SpectrumProfile& profile,
                       std::size_t N) {
  if (W <= 0.0) throw MalformedInputError("make_spectrum: W must be > 0");
  if (N < 2) throw MalformedInputError("make_spectrum: need N >= 2");
  GaussRule rule = gauss_legendre(N, -W / 2, W / 2);
  std::vector<std::complex<double>> values(N);
  for (std::size_t j = 0; j < N; ++j) values[j] = profile(rule.nodes[j]);
  return Spectrum(W, std::move(rule.nodes), std::move(rule.weights),
                  std::move(values));
}

Spectrum make_spectrum_panels(double W, const std::vector<double>& breaks,
                              const SpectrumProfile& profile, std::size_t N) {
  if (W <= 0.0)
    throw MalformedInputError("make_spectrum_panels: W must be > 0");
  std::vector<double> edges;
  edges.push_back(-W / 2);
  for (double b : breaks) {
    if (!(b > edges.back()) || !(b < W / 2))
      throw MalformedInputError(
          "make_spectrum_panels: breakpoints must ascend inside (-W/2, W/2)");
    edges.push_back(b);
  }
  edges.push_back(W / 2);
  const std::size_t panels = edges.size() - 1;
  if (N < 2 * panels)
    throw MalformedInputError("make_spectrum_panels: need >= 2 nodes/panel");
  // Proportional allocation, then trim/pad the largest panel to hit N.
  std::vector<std::size_t> counts(panels);
  std::size_t assigned = 0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double frac = (edges[p + 1] - edges[p]) / W;
    counts[p] = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::llround(frac * N)));
    assigned += counts[p];
  }
  while (assigned > N) {
    auto it = std::max_element(counts.begin(), counts.end());
    --*it;
    --assigned;
  }
  while (assigned < N) {
    auto it = std::max_element(counts.begin(), counts.end());
    ++*it;
    ++assigned;
  }
  std::vector<double> nodes, weights;
  std::vector<std::complex<double>> values;
  nodes.reserve(N);
  weights.reserve(N);
  values.reserve(N);
  for (std::size_t p = 0; p < panels; ++p) {
    GaussRule rule = gauss_legendre(counts[p], edges[p], edges[p + 1]);
    for (std::size_t j = 0; j < counts[p]; ++j) {
      nodes.push_back(rule.nodes[j]);
      weights.push_back(rule.weights[j]);
      values.push_back(profile(rule.nodes[j]));
    }
  }
  return Spectrum(W, std::move(nodes), std::move(weights), std::move(values));
}

std::complex<double> time_kernel(double u, const IntervalUnion& tset) {
  std::complex<double> s{0.0, 0.0};
  for (const auto& [a, b] : tset.parts()) {
    const double len = b - a;
    s += std::polar(len * sinc(kPi * u * len), kPi * u * (a + b));
  }
  return s;
}

double time_energy(const Spectrum& s, const IntervalUnion& tset) {
  const std::size_t N = s.size();
  const auto& nodes = s.nodes();
  const auto& w = s.weights();
  const auto& f = s.values();
  std::vector<std::complex<double>> a(N);
  for (std::size_t j = 0; j < N; ++j) a[j] = w[j] * f[j];
  std::complex<double> total{0.0, 0.0};
  for (std::size_t j = 0; j < N; ++j) {
    std::complex<double> row{0.0, 0.0};
    for (std::size_t k = 0; k < N; ++k)
      row += std::conj(a[k]) * time_kernel(nodes[k] - nodes[j], tset);
    total += a[j] * row;
  }
  const double scale = s.norm_sq();
  if (std::abs(total.imag()) > 1e-8 * scale)
    throw Error("time_energy: imaginary residue exceeds 1e-8 * norm_sq");
  return total.real();
}

Spectrum modulus_spectrum(const Spectrum& s) {
  std::vector<std::complex<double>> values;
  values.reserve(s.size());
  for (const auto& v : s.values()) values.emplace_back(std::abs(v), 0.0);
  return Spectrum(s.W(), s.nodes(), s.weights(), std::move(values));
}

ClaimReport check_thm_main(const Spectrum& s, const IntervalUnion& tset,
                           double tol, bool override_hypothesis, ClaimId id) {
  if (id != ClaimId::thm_main_continuous && id != ClaimId::thm_finite_continuous)
    throw ConfigError("check_thm_main: claim id must be a continuous claim");
  if (s.is_zero())
    throw DegenerateInputError("check_thm_main: zero spectrum");
  const double T = tset.measure();
  if (s.W() * T > 1.0 + 1e-12 && !override_hypothesis)
    throw HypothesisError("check_thm_main: W*T > 1 (use override)");
  const double lhs = time_energy(s, tset);
  double rhs = 0.0;
  if (T > 0.0) {
    const IntervalUnion centered = normalize_intervals({{-T / 2, T / 2}});
    rhs = time_energy(modulus_spectrum(s), centered);
  }
  nlohmann::json witness;
  witness["spectrum"] = to_json(s);
  witness["tset"] = to_json(tset);
  return make_report(id, lhs, rhs, tol, std::move(witness));
}

}  // namespace unclab
