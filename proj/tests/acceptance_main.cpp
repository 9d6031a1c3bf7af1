// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Every frozen value is reproduced by an independent oracle (adaptive
// quadrature, exhaustive permutation, closed-form eigenvalues, direct
// evaluation) inside the criterion that asserts it.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "unclab/bandlimited.hpp"
#include "unclab/campaign.hpp"
#include "unclab/circlepoly.hpp"
#include "unclab/json_io.hpp"
#include "unclab/numeric.hpp"
#include "unclab/rearrange.hpp"
#include "unclab/rng.hpp"
#include "unclab/specsup.hpp"
#include "unclab/trigbound.hpp"

using namespace unclab;
using C = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
  void note(const std::string& s) {
    detail << (detail.str().empty() ? "" : "; ") << s;
  }
};

Poly random_poly(Rng& rng, std::size_t degree) {
  std::vector<C> c(degree + 1);
  for (auto& z : c) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return Poly(std::move(c), true);
}

ArcUnion random_omega(Rng& rng, double total) {
  return random_arcs(rng.uniform_int(1, 3), total, rng.next_u64());
}

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

std::string fmt(double x) { return format_double(x); }

// ---- criteria -------------------------------------------------------------

Criterion c1_exactness() {
  Criterion c;
  const auto t0 = Clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, rng.uniform_int(0, 12));
    const auto omega = random_omega(rng, rng.uniform(0.1, 5.0));
    const double closed = arc_energy(p, omega);
    const double oracle = oracles::arc_energy_quadrature(p, omega, 1e-13);
    worst = std::max(worst, rel_err(closed, oracle));
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(worst < 1e-9, "worst rel err " + fmt(worst));
  c.require(secs < 10.0, "runtime " + fmt(secs) + " s");
  c.note("200 instances, worst rel err " + fmt(worst) + ", " + fmt(secs) +
         " s");
  return c;
}

Criterion c2_identities() {
  Criterion c;
  Rng rng(102);
  double worst_mono = 0.0, worst_full = 0.0, worst_rot = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = rng.uniform_int(0, 12);
    std::vector<C> mono(k + 1, C{0, 0});
    mono[k] = std::polar(1.0, rng.uniform(0.0, kTwoPi));
    const auto omega = random_omega(rng, rng.uniform(0.05, 6.0));
    worst_mono = std::max(
        worst_mono, rel_err(arc_energy(Poly(mono), omega), measure(omega)));

    const Poly p = random_poly(rng, rng.uniform_int(0, 10));
    worst_full = std::max(
        worst_full, rel_err(arc_energy(p, ArcUnion::full_circle()), norm_sq(p)));

    const double theta = rng.uniform(-8.0, 8.0);
    worst_rot = std::max(
        worst_rot, rel_err(arc_energy(rotate_poly(p, theta),
                                      omega.rotated(theta)),
                           arc_energy(p, omega)));
  }
  c.require(worst_mono < 1e-12, "monomial energy err " + fmt(worst_mono));
  c.require(worst_full < 1e-12, "full-circle err " + fmt(worst_full));
  c.require(worst_rot < 1e-10, "rotation covariance err " + fmt(worst_rot));

  double worst_shift = 0.0, worst_mod = 0.0, worst_r1 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t r = rng.uniform_int(1, 4);
    std::vector<double> A(r), B(r);
    for (auto& x : A) x = rng.uniform(-kPi, kPi);
    for (auto& x : B) x = rng.uniform(-kPi, kPi);
    const auto cfg = make_trig_config(A, B);
    const double h = h_value(cfg);
    const double s = rng.uniform(-10.0, 10.0);
    std::vector<double> As(A), Bs(B);
    for (auto& x : As) x += s;
    for (auto& x : Bs) x += s;
    worst_shift =
        std::max(worst_shift,
                 std::abs(h_value(make_trig_config(As, Bs)) - h) /
                     std::max(1.0, h));
    C z{0, 0};
    for (std::size_t p = 0; p < r; ++p)
      z += std::polar(1.0, B[p]) - std::polar(1.0, A[p]);
    worst_mod = std::max(worst_mod, std::abs(h - abs_sq(z)));

    const double a = rng.uniform(-7.0, 7.0), b = rng.uniform(-7.0, 7.0);
    worst_r1 = std::max(
        worst_r1, std::abs(h_value(make_trig_config({a}, {b})) -
                           (2 - 2 * std::cos(b - a))));
  }
  c.require(worst_shift < 1e-10, "h shift invariance " + fmt(worst_shift));
  c.require(worst_mod < 1e-12, "h modulus identity " + fmt(worst_mod));
  c.require(worst_r1 < 1e-12, "r=1 closed form " + fmt(worst_r1));
  c.note("1000 instances per identity");
  return c;
}

Criterion c3_sub_inequalities() {
  Criterion c;
  Rng rng(103);
  std::size_t circle_viol = 0, cont_viol = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng.uniform_int(1, 12);
    const Poly p = random_poly(rng, n);
    const double delta = rng.uniform(0.02, 1.0) * kPi / double(n);
    const auto interval = ArcUnion::centered_interval(delta);
    if (arc_energy(p, interval) >
        arc_energy(modulus_poly(p), interval) + 1e-10)
      ++circle_viol;
  }
  for (int i = 0; i < 1000; ++i) {
    const double W = rng.uniform(0.2, 2.0);
    const double T = rng.uniform(0.05, 1.0) / W;
    std::vector<C> coef(4);
    for (auto& z : coef) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const Spectrum s = make_spectrum(
        W,
        [&coef, W](double w) {
          const double x = 2.0 * w / W;
          C acc{0, 0};
          for (auto it = coef.rbegin(); it != coef.rend(); ++it)
            acc = acc * x + *it;
          return acc;
        },
        48);
    const auto interval = normalize_intervals({{-T / 2, T / 2}});
    if (time_energy(s, interval) >
        time_energy(modulus_spectrum(s), interval) + 1e-8)
      ++cont_viol;
  }
  c.require(circle_viol == 0,
            std::to_string(circle_viol) + " circle violations");
  c.require(cont_viol == 0,
            std::to_string(cont_viol) + " continuous violations");
  c.note("1000 circle + 1000 continuous trials, zero violations");
  return c;
}

Criterion c4_hlp() {
  Criterion c;
  Rng rng(104);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t len = rng.uniform_int(1, 7);  // degree <= 6
    std::vector<double> coeffs(len);
    for (auto& x : coeffs) x = rng.uniform(0.0, 3.0);
    const double n = double(len - 1);
    const double delta =
        n == 0 ? rng.uniform(0.1, kPi) : rng.uniform(0.05, 1.0) * kPi / n;
    const auto [best, oracle] = brute_force_best_permutation(coeffs, delta);
    worst = std::max(
        worst, std::abs(interval_energy_form(hlp_order(coeffs), delta) -
                        oracle));
  }
  c.require(worst < 1e-10, "worst |hlp - exhaustive| " + fmt(worst));
  c.note("100 random nonneg sets, n <= 6, worst gap " + fmt(worst));
  return c;
}

Criterion c5_equality_fixtures() {
  Criterion c;
  Rng rng(105);
  double worst_h = 0.0, worst_margin = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t r = rng.uniform_int(1, 5);
    const double a = rng.uniform(-5.0, 5.0);
    const double L = rng.uniform(-8.0, 8.0);
    std::vector<double> A(r, a), B(r, a);
    B[r - 1] = a + L;
    worst_h = std::max(worst_h, std::abs(h_value(make_trig_config(A, B)) -
                                         claimed_bound(L)));

    const std::size_t n = rng.uniform_int(0, 8);
    std::vector<double> coeffs(n + 1);
    for (auto& x : coeffs) x = rng.uniform(0.0, 2.0);
    std::vector<C> cc(coeffs.begin(), coeffs.end());
    const Poly p(cc, true);
    const double delta =
        n == 0 ? rng.uniform(0.1, kPi) : rng.uniform(0.05, 1.0) * kPi / n;
    const ClaimReport rep = check_thm_discrete(
        p, ArcUnion::centered_interval(delta), 1e-10);
    worst_margin = std::max(worst_margin, std::abs(rep.margin));
  }
  c.require(worst_h <= 1e-12, "canonical h gap " + fmt(worst_h));
  c.require(worst_margin <= 1e-10,
            "nonneg-interval margin " + fmt(worst_margin));
  c.note("canonical h gap " + fmt(worst_h) + ", nonneg margin " +
         fmt(worst_margin));
  return c;
}

Criterion c6_violation_certificates() {
  Criterion c;
  // D1: aligned pairs (0,0) -> (1,1)
  const ClaimReport d1 =
      check_lemma_h(make_trig_config({0, 0}, {1, 1}), 1e-10);
  const double d1_expected =
      16 * std::pow(std::sin(0.5), 2) - 4 * std::pow(std::sin(1.0), 2);
  c.require(std::abs(d1.margin - d1_expected) <= 1e-9,
            "D1 margin " + fmt(d1.margin));
  c.require(!d1.satisfied, "D1 not flagged");
  c.require(recheck(to_json(d1)), "D1 recheck failed");

  // D2: antipodal arc pair, closed forms confirmed by quadrature
  Poly p2({C{1, 0}, C{0, 0}, C{1, 0}});
  const auto d2set =
      ArcUnion::from_raw({{-kPi / 8, kPi / 8}, {7 * kPi / 8, 9 * kPi / 8}});
  const ClaimReport d2 = check_thm_discrete(p2, d2set, 1e-10);
  c.require(std::abs(d2.lhs - (kPi + 2 * std::sqrt(2.0))) <= 1e-9,
            "D2 lhs " + fmt(d2.lhs));
  c.require(std::abs(d2.rhs - (kPi + 2)) <= 1e-9, "D2 rhs " + fmt(d2.rhs));
  c.require(std::abs(d2.margin - (2 * std::sqrt(2.0) - 2)) <= 1e-9,
            "D2 margin " + fmt(d2.margin));
  c.require(rel_err(d2.lhs, oracles::arc_energy_quadrature(p2, d2set)) < 1e-10,
            "D2 lhs oracle mismatch");
  c.require(!d2.satisfied, "D2 not flagged");
  c.require(recheck(to_json(d2)), "D2 recheck failed");

  // D3: spectral rectangle pair on the panel rule
  const double W = 0.5, h = 1.0 / 200, cc = W / 2 - h;
  const double t2 = 1.0 / (2 * cc);
  const auto profile = [=](double w) {
    const double d = std::abs(w);
    return (d >= cc - h && d <= cc + h) ? C{1, 0} : C{0, 0};
  };
  const auto tset =
      normalize_intervals({{-0.25, 0.25}, {t2 - 0.25, t2 + 0.25}});
  const Spectrum s400 =
      make_spectrum_panels(W, {-(cc - h), cc - h}, profile, 400);
  const ClaimReport d3 = check_thm_main(s400, tset, 1e-8);
  const double ratio = d3.lhs / d3.rhs;
  c.require(ratio > 1.05, "D3 ratio " + fmt(ratio));
  c.require(!d3.satisfied, "D3 not flagged");
  const Spectrum s800 =
      make_spectrum_panels(W, {-(cc - h), cc - h}, profile, 800);
  const ClaimReport d3b = check_thm_main(s800, tset, 1e-8);
  const double drift = std::abs((d3b.lhs / d3b.rhs) / ratio - 1.0);
  c.require(drift < 1e-6, "D3 doubling drift " + fmt(drift));
  c.require(recheck(to_json(d3)), "D3 recheck failed");
  c.note("margins D1 " + fmt(d1.margin) + ", D2 " + fmt(d2.margin) +
         ", D3 ratio " + fmt(ratio) + " (drift " + fmt(drift) + ")");
  return c;
}

Criterion c7_eigen_layer() {
  Criterion c;
  Rng rng(107);
  double worst_res = 0.0, worst_lam = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double delta = rng.uniform(0.01, kPi - 0.01);
    const EigenResult r =
        top_eigenpair(circle_conc_matrix(ArcUnion::centered_interval(delta), 1));
    worst_res = std::max(worst_res, r.residual);
    worst_lam = std::max(
        worst_lam, std::abs(r.lambda - (delta + std::sin(delta)) / kPi));
  }
  c.require(worst_res < 1e-10, "residual " + fmt(worst_res));
  c.require(worst_lam <= 1e-10, "n=1 lambda err " + fmt(worst_lam));

  // Rayleigh dominance on a fixed matrix over 1000 random unit vectors
  const auto d2set =
      ArcUnion::from_raw({{-kPi / 8, kPi / 8}, {7 * kPi / 8, 9 * kPi / 8}});
  const auto m = circle_conc_matrix(d2set, 2);
  const EigenResult top = top_eigenpair(m);
  worst_res = std::max(worst_res, top.residual);
  std::size_t dominance_viol = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<C> v(m.dim);
    double norm = 0.0;
    for (auto& z : v) {
      z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      norm += abs_sq(z);
    }
    norm = std::sqrt(norm);
    C acc{0, 0};
    for (std::size_t a = 0; a < m.dim; ++a)
      for (std::size_t b = 0; b < m.dim; ++b)
        acc += std::conj(v[a]) / norm * m.at(a, b) * v[b] / norm;
    if (acc.real() > top.lambda + 1e-9) ++dominance_viol;
  }
  c.require(dominance_viol == 0,
            std::to_string(dominance_viol) + " Rayleigh dominance violations");

  // D2 lambda vs the interval 3x3, with the closed-form cubic as oracle
  const double lam_d2_expected = 0.25 + std::sqrt(2.0) / kTwoPi;
  c.require(std::abs(top.lambda - lam_d2_expected) <= 1e-9,
            "D2 lambda " + fmt(top.lambda));
  const auto eigs = oracles::symmetric3_toeplitz_eigs(
      0.25, std::sin(kPi / 4) / kPi, 1.0 / kTwoPi);
  const EigenResult ri = top_eigenpair(
      circle_conc_matrix(ArcUnion::centered_interval(kPi / 4), 2));
  worst_res = std::max(worst_res, ri.residual);
  c.require(std::abs(ri.lambda - eigs.back()) <= 1e-9,
            "interval 3x3 lambda " + fmt(ri.lambda));
  c.require(ri.lambda > top.lambda, "interval not strictly larger");
  c.note("D2 lambda " + fmt(top.lambda) + " vs interval " + fmt(ri.lambda) +
         ", worst residual " + fmt(worst_res));
  return c;
}

Criterion c8_montgomery_ceiling() {
  Criterion c;
  const Campaign camp = parse_campaign(
      nlohmann::json{{"claim", "thm_improv"},
                     {"trials", 1000},
                     {"seed", 8},
                     {"params", nlohmann::json{{"family", "symmetric_even"},
                                               {"n_max", 12}}}});
  double worst_ratio = 0.0;
  for (std::size_t t = 0; t < camp.trials; ++t) {
    const ClaimReport r =
        check_instance(camp.claim, generate_witness(camp, t), camp.tol, false);
    if (r.ratio) worst_ratio = std::max(worst_ratio, *r.ratio);
  }
  c.require(worst_ratio < 20.0 + 1e-6, "worst ratio " + fmt(worst_ratio));
  c.note("1000 symmetric even-degree instances, worst ratio " +
         fmt(worst_ratio));
  return c;
}

Criterion c9_determinism(const std::string& cli, const std::string& fixtures) {
  Criterion c;
  // library-level double run
  const nlohmann::json cfg{
      {"claim", "thm_discrete"},
      {"trials", 128},
      {"seed", 4242},
      {"params", nlohmann::json{{"structured", true}, {"n_max", 6}}}};
  const std::string a = run_campaign(parse_campaign(cfg)).to_json().dump(2);
  const std::string b = run_campaign(parse_campaign(cfg)).to_json().dump(2);
  c.require(a == b, "library campaign bytes differ");

  auto shell = [&](const std::string& args) {
    const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  auto shell_out = [&](const std::string& args, const std::string& out) {
    const std::string cmd = cli + " " + args + " --out " + out + " 2>/dev/null";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  const std::string o1 = std::string(std::tmpnam(nullptr)) + ".json";
  const std::string o2 = std::string(std::tmpnam(nullptr)) + ".json";
  shell_out("campaign " + fixtures + "/d3_thm_main.json", o1);
  shell_out("campaign " + fixtures + "/d3_thm_main.json", o2);
  std::ifstream f1(o1, std::ios::binary), f2(o2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  c.require(!s1.str().empty() && s1.str() == s2.str(),
            "CLI campaign bytes differ");
  std::remove(o1.c_str());
  std::remove(o2.c_str());

  c.require(shell("campaign " + fixtures + "/d1_lemma_h.json") == 2,
            "D1 exit code");
  c.require(shell("campaign " + fixtures + "/d2_thm_discrete.json") == 2,
            "D2 exit code");
  c.require(shell("campaign " + fixtures + "/d3_thm_main.json") == 2,
            "D3 exit code");
  c.require(shell("campaign " + fixtures + "/clean_lemma_h_r1.json") == 0,
            "clean exit code");
  c.require(shell("campaign " + fixtures + "/bad_config.json") == 1,
            "error exit code");
  c.note("byte-identical artifacts; exit codes 2/2/2/0/1");
  return c;
}

}  // namespace

int main() {
  const auto suite_t0 = Clock::now();
  const std::string cli = UNCLAB_CLI_BIN;
  const std::string fixtures = UNCLAB_FIXTURE_DIR;

  struct Entry {
    const char* name;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries{
      {"1 arc_energy exactness vs adaptive quadrature", c1_exactness},
      {"2 algebraic identities (energies, rotations, h)", c2_identities},
      {"3 valid sub-inequalities on centered intervals", c3_sub_inequalities},
      {"4 HLP ordering matches exhaustive permutation max", c4_hlp},
      {"5 equality fixtures (canonical h, nonneg interval)",
       c5_equality_fixtures},
      {"6 violation certificates D1/D2/D3 with recheck",
       c6_violation_certificates},
      {"7 eigen layer (residuals, fixtures, dominance)", c7_eigen_layer},
      {"8 Montgomery factor-20 ceiling on 1000 instances",
       c8_montgomery_ceiling},
      {"9 determinism and exit-code contract",
       [&] { return c9_determinism(cli, fixtures); }},
  };

  bool all = true;
  for (const auto& e : entries) {
    Criterion c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.pass = false;
      c.note(std::string("exception: ") + ex.what());
    }
    all = all && c.pass;
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << e.name;
    if (!c.detail.str().empty()) std::cout << " -- " << c.detail.str();
    std::cout << '\n';
  }

  const double secs =
      std::chrono::duration<double>(Clock::now() - suite_t0).count();
  const bool perf = secs < 300.0;
  all = all && perf;
  std::cout << (perf ? "[PASS] " : "[FAIL] ")
            << "10 performance: suite completed in " << format_double(secs)
            << " s (< 300 s)\n";
  return all ? 0 : 1;
}
