#include "unclab/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unclab/errors.hpp"
#include "unclab/json_io.hpp"
#include "unclab/numeric.hpp"

namespace unclab {

ToeplitzWeights toeplitz_weights(std::size_t n, double delta) {
  if (delta <= 0.0)
    throw MalformedInputError("toeplitz_weights: delta must be > 0");
  ToeplitzWeights w;
  w.n = n;
  w.delta = delta;
  w.s.resize(n + 1);
  for (std::size_t nu = 0; nu <= n; ++nu)
    w.s[nu] = 2.0 * delta * sinc(static_cast<double>(nu) * delta);
  return w;
}

CosineSeries::CosineSeries(std::vector<double> a) : a_(std::move(a)) {
  if (a_.empty())
    throw MalformedInputError("CosineSeries: need at least one coefficient");
  for (double x : a_)
    if (!std::isfinite(x))
      throw MalformedInputError("CosineSeries: non-finite coefficient");
}

namespace {

// Index sequence of the central ordering: where the k-th largest value goes.
std::vector<std::size_t> central_positions(std::size_t count) {
  const std::size_t n = count - 1;
  std::vector<std::size_t> pos;
  pos.reserve(count);
  if (n % 2 == 0) {
    const std::size_t c = n / 2;
    pos.push_back(c);
    for (std::size_t k = 1; pos.size() < count; ++k) {
      if (c + k <= n) pos.push_back(c + k);
      if (pos.size() < count && c >= k) pos.push_back(c - k);
    }
  } else {
    const std::size_t hi = (n + 1) / 2, lo = n / 2;
    pos.push_back(hi);
    pos.push_back(lo);
    for (std::size_t k = 1; pos.size() < count; ++k) {
      if (hi + k <= n) pos.push_back(hi + k);
      if (pos.size() < count && lo >= k) pos.push_back(lo - k);
    }
  }
  return pos;
}

}  // namespace

Poly hlp_order(const std::vector<double>& coeffs) {
  if (coeffs.empty())
    throw MalformedInputError("hlp_order: empty coefficient list");
  for (double c : coeffs)
    if (!(c >= 0.0))
      throw MalformedInputError("hlp_order: coefficients must be nonnegative");
  std::vector<std::size_t> order(coeffs.size());
  std::iota(order.begin(), order.end(), 0);
  // Descending by value, ties by input position.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return coeffs[a] > coeffs[b];
  });
  const auto pos = central_positions(coeffs.size());
  std::vector<Poly::Coeff> out(coeffs.size());
  for (std::size_t rank = 0; rank < coeffs.size(); ++rank)
    out[pos[rank]] = Poly::Coeff(coeffs[order[rank]], 0.0);
  return Poly(std::move(out), /*keep_trailing_zeros=*/true);
}

double interval_energy_form(const Poly& p, double delta) {
  const auto& a = p.coeffs();
  const std::size_t n = a.size();
  const ToeplitzWeights w = toeplitz_weights(n - 1, delta);
  double total = 0.0;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t nu = l >= m ? l - m : m - l;
      total += (a[l] * std::conj(a[m])).real() * w.s[nu];
    }
  return total;
}

std::pair<Poly, double> brute_force_best_permutation(
    const std::vector<double>& coeffs, double delta) {
  if (coeffs.size() > 8)
    throw SizeGuardError(
        "brute_force_best_permutation: more than 8 coefficients");
  for (double c : coeffs)
    if (!(c >= 0.0))
      throw MalformedInputError(
          "brute_force_best_permutation: coefficients must be nonnegative");
  std::vector<double> perm = coeffs;
  std::sort(perm.begin(), perm.end());
  std::vector<double> best_perm = perm;
  double best = -1.0;
  do {
    std::vector<Poly::Coeff> c(perm.begin(), perm.end());
    const double v = interval_energy_form(Poly(c, true), delta);
    if (v > best) {
      best = v;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Poly::Coeff> c(best_perm.begin(), best_perm.end());
  return {Poly(std::move(c), true), best};
}

Poly montgomery_embed(const CosineSeries& f) {
  const auto& a = f.a();
  const std::size_t n = a.size() - 1;
  if (n == 0) return Poly({Poly::Coeff(a[0], 0.0)}, true);
  std::vector<Poly::Coeff> c(2 * n + 1);
  for (std::size_t j = 0; j <= 2 * n; ++j) {
    const std::size_t k = j >= n ? j - n : n - j;
    c[j] = Poly::Coeff(a[k] / 2.0, 0.0);
  }
  c[n] = Poly::Coeff(a[0], 0.0);
  return Poly(std::move(c), true);
}

ClaimReport check_thm_improv(const Poly& p, const ArcUnion& omega, double tol,
                             bool override_hypothesis) {
  if (p.is_zero())
    throw DegenerateInputError("check_thm_improv: zero polynomial");
  const double delta = omega.measure() / 2.0;
  const double n = static_cast<double>(p.degree());
  if (n * delta > kPi + 1e-12 && !override_hypothesis)
    throw HypothesisError("check_thm_improv: n*delta > pi (use override)");
  if (delta <= 0.0)
    throw DegenerateInputError("check_thm_improv: empty omega");
  std::vector<double> moduli;
  moduli.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) moduli.push_back(std::abs(c));
  const Poly p_star = hlp_order(moduli);
  const double lhs = arc_energy(p, omega);
  const double rhs = interval_energy_form(p_star, delta);
  nlohmann::json witness;
  witness["poly"] = to_json(p);
  witness["omega"] = to_json(omega);
  ClaimReport r =
      make_report(ClaimId::thm_improv, lhs, rhs, tol, std::move(witness));
  r.ratio = lhs / rhs;
  return r;
}

ClaimReport check_montgomery20(const CosineSeries& f, const ArcUnion& omega,
                               double tol) {
  const double delta = omega.measure() / 2.0;
  if (delta <= 0.0)
    throw DegenerateInputError("check_montgomery20: empty omega");
  const Poly p = montgomery_embed(f);
  if (p.is_zero())
    throw DegenerateInputError("check_montgomery20: zero series");
  std::vector<double> moduli;
  moduli.reserve(f.a().size());
  for (double x : f.a()) moduli.push_back(std::abs(x));
  std::sort(moduli.begin(), moduli.end(), std::greater<double>());
  const Poly p_rearranged = montgomery_embed(CosineSeries(moduli));
  const double lhs = arc_energy(p, omega);
  const double form = interval_energy_form(p_rearranged, delta);
  nlohmann::json witness;
  witness["cosine"] = to_json(f);
  witness["omega"] = to_json(omega);
  ClaimReport r = make_report(ClaimId::montgomery20, lhs, 20.0 * form, tol,
                              std::move(witness));
  r.ratio = lhs / form;
  return r;
}

}  // namespace unclab
