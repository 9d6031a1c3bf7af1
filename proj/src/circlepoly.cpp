#include "unclab/circlepoly.hpp"

#include <cmath>

#include "unclab/errors.hpp"
#include "unclab/json_io.hpp"
#include "unclab/numeric.hpp"

namespace unclab {

Poly::Poly(std::vector<Coeff> coeffs, bool keep_trailing_zeros)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw MalformedInputError("Poly: coefficient list must be nonempty");
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw MalformedInputError("Poly: non-finite coefficient");
  }
  if (!keep_trailing_zeros) {
    while (coeffs_.size() > 1 && coeffs_.back() == Coeff{0.0, 0.0})
      coeffs_.pop_back();
  }
}

bool Poly::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != Coeff{0.0, 0.0}) return false;
  return true;
}

Poly::Coeff Poly::eval(std::complex<double> z) const {
  Coeff acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

namespace {

// sum_p int_{a_p}^{b_p} e^{i nu theta} dtheta in the phase-symmetric form.
std::complex<double> arc_integral(int nu, const ArcUnion& omega) {
  std::complex<double> s{0.0, 0.0};
  for (const auto& [a, b] : omega.arcs()) {
    const double len = b - a;
    const double mid = 0.5 * (a + b);
    s += std::polar(len * sinc(0.5 * nu * len), nu * mid);
  }
  return s;
}

}  // namespace

double arc_energy(const Poly& p, const ArcUnion& omega) {
  const auto& a = p.coeffs();
  const int n = static_cast<int>(a.size());
  // Arc integrals depend only on l - m; precompute per difference.
  std::vector<std::complex<double>> integral(2 * n - 1);
  for (int nu = -(n - 1); nu <= n - 1; ++nu)
    integral[nu + n - 1] = arc_integral(nu, omega);
  std::complex<double> total{0.0, 0.0};
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      total += a[l] * std::conj(a[m]) * integral[l - m + n - 1];
  const double scale = norm_sq(p);
  if (std::abs(total.imag()) > 1e-10 * scale)
    throw Error("arc_energy: imaginary residue exceeds 1e-10 * norm_sq");
  return total.real();
}

double norm_sq(const Poly& p) {
  double s = 0.0;
  for (const auto& c : p.coeffs()) s += abs_sq(c);
  return kTwoPi * s;
}

double concentration(const Poly& p, const ArcUnion& omega) {
  if (p.is_zero())
    throw DegenerateInputError("concentration: zero polynomial");
  return arc_energy(p, omega) / norm_sq(p);
}

Poly modulus_poly(const Poly& p) {
  std::vector<Poly::Coeff> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(std::abs(c), 0.0);
  return Poly(std::move(out), /*keep_trailing_zeros=*/true);
}

Poly rotate_poly(const Poly& p, double theta) {
  std::vector<Poly::Coeff> out;
  out.reserve(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    out.push_back(p.coeffs()[k] *
                  std::polar(1.0, -static_cast<double>(k) * theta));
  return Poly(std::move(out), /*keep_trailing_zeros=*/true);
}

ClaimReport check_thm_discrete(const Poly& p, const ArcUnion& omega,
                               double tol, bool override_hypothesis) {
  if (p.is_zero())
    throw DegenerateInputError("check_thm_discrete: zero polynomial");
  const double delta = omega.measure() / 2.0;
  const double n = static_cast<double>(p.degree());
  if (n * delta > kPi + 1e-12 && !override_hypothesis)
    throw HypothesisError("check_thm_discrete: n*delta > pi (use override)");
  const double lhs = arc_energy(p, omega);
  const double rhs =
      delta > 0.0
          ? arc_energy(modulus_poly(p), ArcUnion::centered_interval(delta))
          : 0.0;
  nlohmann::json witness;
  witness["poly"] = to_json(p);
  witness["omega"] = to_json(omega);
  return make_report(ClaimId::thm_discrete, lhs, rhs, tol, std::move(witness));
}

}  // namespace unclab
