#include "unclab/trigbound.hpp"

#include <algorithm>
#include <cmath>

#include "unclab/errors.hpp"
#include "unclab/json_io.hpp"
#include "unclab/numeric.hpp"
#include "unclab/rng.hpp"

namespace unclab {

double TrigConfig::L() const {
  double l = 0.0;
  for (std::size_t p = 0; p < A.size(); ++p) l += B[p] - A[p];
  return l;
}

TrigConfig make_trig_config(std::vector<double> A, std::vector<double> B) {
  if (A.empty() || A.size() != B.size())
    throw MalformedInputError("TrigConfig: need equal-length A, B with r >= 1");
  for (double x : A)
    if (!std::isfinite(x)) throw MalformedInputError("TrigConfig: non-finite A");
  for (double x : B)
    if (!std::isfinite(x)) throw MalformedInputError("TrigConfig: non-finite B");
  return TrigConfig{std::move(A), std::move(B)};
}

double h_value(const TrigConfig& c) {
  double s = 0.0, co = 0.0;
  for (std::size_t p = 0; p < c.A.size(); ++p) {
    s += std::sin(c.B[p]) - std::sin(c.A[p]);
    co += std::cos(c.B[p]) - std::cos(c.A[p]);
  }
  return s * s + co * co;
}

double claimed_bound(double L) {
  const double s = std::sin(L / 2.0);
  return 4.0 * s * s;
}

ClaimReport check_lemma_h(const TrigConfig& c, double tol) {
  const double lhs = h_value(c);
  const double rhs = claimed_bound(c.L());
  nlohmann::json witness = to_json(c);
  return make_report(ClaimId::lemma_h_bound, lhs, rhs, tol,
                     std::move(witness));
}

namespace {

// Free variables: A_1..A_r, B_1..B_{r-1}; B_r is eliminated through the
// budget so every iterate is exactly feasible.
struct AscentState {
  std::vector<double> A;
  std::vector<double> Bfree;  // B_1..B_{r-1}
  double L;

  TrigConfig config() const {
    const std::size_t r = A.size();
    std::vector<double> B(Bfree);
    double sum = 0.0;
    for (std::size_t p = 0; p + 1 < r; ++p) sum += Bfree[p] - A[p];
    B.push_back(A[r - 1] + L - sum);
    return TrigConfig{A, B};
  }
};

void gradient(const AscentState& st, std::vector<double>& grad) {
  const TrigConfig c = st.config();
  const std::size_t r = c.A.size();
  double S = 0.0, C = 0.0;
  for (std::size_t p = 0; p < r; ++p) {
    S += std::sin(c.B[p]) - std::sin(c.A[p]);
    C += std::cos(c.B[p]) - std::cos(c.A[p]);
  }
  grad.assign(2 * r - 1, 0.0);
  const double Br = c.B[r - 1];
  // d/dA_q for q < r
  for (std::size_t q = 0; q + 1 < r; ++q)
    grad[q] = 2.0 * S * (-std::cos(c.A[q])) + 2.0 * C * std::sin(c.A[q]);
  // d/dA_r: B_r moves with A_r
  grad[r - 1] = 2.0 * S * (std::cos(Br) - std::cos(c.A[r - 1])) +
                2.0 * C * (-std::sin(Br) + std::sin(c.A[r - 1]));
  // d/dB_q for q < r: B_r compensates
  for (std::size_t q = 0; q + 1 < r; ++q)
    grad[r + q] = 2.0 * S * (std::cos(c.B[q]) - std::cos(Br)) +
                  2.0 * C * (-std::sin(c.B[q]) + std::sin(Br));
}

double ascend(AscentState& st) {
  std::vector<double> grad;
  double value = h_value(st.config());
  for (int iter = 0; iter < 500; ++iter) {
    gradient(st, grad);
    double gnorm = 0.0;
    for (double g : grad) gnorm += g * g;
    gnorm = std::sqrt(gnorm);
    if (gnorm < 1e-10) break;
    double step = 0.1;
    bool improved = false;
    while (step > 1e-14) {
      AscentState trial = st;
      const std::size_t r = st.A.size();
      for (std::size_t q = 0; q < r; ++q) trial.A[q] += step * grad[q];
      for (std::size_t q = 0; q + 1 < r; ++q)
        trial.Bfree[q] += step * grad[r + q];
      const double v = h_value(trial.config());
      if (v > value) {
        st = trial;
        value = v;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return value;
}

}  // namespace

std::pair<TrigConfig, double> multistart_max_h(std::size_t r, double L,
                                               std::size_t restarts,
                                               std::uint64_t seed) {
  if (r < 1 || restarts < 1)
    throw MalformedInputError("multistart_max_h: need r >= 1, restarts >= 1");
  TrigConfig best_cfg;
  double best = -1.0;
  for (std::size_t s = 0; s < restarts; ++s) {
    AscentState st;
    st.L = L;
    if (s == 0) {
      // Canonical equality point (A,...,A,A+L) with A = 0.
      st.A.assign(r, 0.0);
      st.Bfree.assign(r - 1, 0.0);
    } else {
      Rng rng = Rng::substream(seed, s);
      st.A.resize(r);
      st.Bfree.resize(r - 1);
      for (auto& x : st.A) x = rng.uniform(-kPi, kPi);
      for (auto& x : st.Bfree) x = rng.uniform(-kPi, kPi);
    }
    const double v = ascend(st);
    if (v > best) {
      best = v;
      best_cfg = st.config();
    }
  }
  return {best_cfg, best};
}

std::size_t residue_clusters(const std::vector<double>& x, double tol) {
  if (!(tol > 0.0)) throw MalformedInputError("residue_clusters: tol must be > 0");
  if (x.empty()) return 0;
  std::vector<double> y;
  y.reserve(x.size());
  for (double v : x) y.push_back(wrap_angle(v));
  std::sort(y.begin(), y.end());
  // Count circular gaps wider than tol; each such gap separates clusters.
  std::size_t breaks = 0;
  for (std::size_t i = 0; i + 1 < y.size(); ++i)
    if (y[i + 1] - y[i] > tol) ++breaks;
  if (y.front() + kTwoPi - y.back() > tol) ++breaks;
  // No wide gap at all: the tol-balls chain around the whole circle.
  return breaks == 0 ? 1 : breaks;
}

double max_sum_sin_reduced(std::size_t n, double L, std::size_t grid) {
  if (n < 1) throw MalformedInputError("max_sum_sin_reduced: n >= 1");
  if (grid < 100) throw MalformedInputError("max_sum_sin_reduced: grid >= 100");
  double best = 0.0;
  const int ni = static_cast<int>(n);
  for (int m = -ni; m <= ni; ++m) {
    const double budget = L + kTwoPi * static_cast<double>(m);
    // All-equal class.
    best = std::max(best, std::abs(static_cast<double>(n) *
                                   std::sin(budget / static_cast<double>(n))));
    for (int k = 1; k < ni; ++k) {
      const double kk = static_cast<double>(k);
      const double nk = static_cast<double>(ni - k);
      for (std::size_t g = 0; g < grid; ++g) {
        const double y =
            kTwoPi * static_cast<double>(g) / static_cast<double>(grid);
        const double yp = (budget - kk * y) / nk;
        best = std::max(best, std::abs(kk * std::sin(y) + nk * std::sin(yp)));
      }
    }
  }
  return best;
}

ClaimReport check_lemma_sin_cluster(const std::vector<double>& x,
                                    std::size_t grid, double tol) {
  if (x.empty())
    throw MalformedInputError("check_lemma_sin_cluster: empty instance");
  double sum = 0.0, sins = 0.0;
  for (double v : x) {
    sum += v;
    sins += std::sin(v);
  }
  const double lhs = std::abs(sins);
  const double rhs = max_sum_sin_reduced(x.size(), sum, grid);
  nlohmann::json witness;
  witness["x"] = x;
  witness["grid"] = grid;
  return make_report(ClaimId::lemma_sin_cluster, lhs, rhs, tol,
                     std::move(witness));
}

}  // namespace unclab
