#include <doctest.h>

#include <cmath>
#include <complex>

#include "support/oracles.hpp"
#include "unclab/errors.hpp"
#include "unclab/numeric.hpp"
#include "unclab/rng.hpp"
#include "unclab/trigbound.hpp"

using namespace unclab;

namespace {

TrigConfig random_config(Rng& rng, std::size_t r, double span = kPi) {
  std::vector<double> A(r), B(r);
  for (auto& x : A) x = rng.uniform(-span, span);
  for (auto& x : B) x = rng.uniform(-span, span);
  return make_trig_config(std::move(A), std::move(B));
}

}  // namespace

TEST_CASE("h fixtures") {
  const auto single = make_trig_config({0.7}, {1.7});
  CHECK(h_value(single) ==
        doctest::Approx(4 * std::pow(std::sin(0.5), 2)).epsilon(1e-12));
  CHECK(h_value(make_trig_config({0.4, -1.0}, {0.4, -1.0})) ==
        doctest::Approx(0.0));
  const auto d1 = make_trig_config({0, 0}, {1, 1});
  CHECK(h_value(d1) ==
        doctest::Approx(16 * std::pow(std::sin(0.5), 2)).epsilon(1e-12));
}

TEST_CASE("claimed bound fixtures") {
  CHECK(claimed_bound(0.0) == 0.0);
  CHECK(claimed_bound(2.0) ==
        doctest::Approx(4 * std::pow(std::sin(1.0), 2)).epsilon(1e-12));
  CHECK(claimed_bound(kTwoPi) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("h is shift invariant and equals the complex modulus form") {
  Rng rng(41);
  for (int i = 0; i < 10000; ++i) {
    const auto c = random_config(rng, rng.uniform_int(1, 4));
    const double s = rng.uniform(-10.0, 10.0);
    std::vector<double> As(c.A), Bs(c.B);
    for (auto& x : As) x += s;
    for (auto& x : Bs) x += s;
    const double h0 = h_value(c);
    CHECK(h_value(make_trig_config(As, Bs)) ==
          doctest::Approx(h0).epsilon(1e-10).scale(1.0));

    std::complex<double> z{0.0, 0.0};
    for (std::size_t p = 0; p < c.r(); ++p)
      z += std::polar(1.0, c.B[p]) - std::polar(1.0, c.A[p]);
    CHECK(h0 == doctest::Approx(abs_sq(z)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("r=1 closed form h = 2 - 2 cos(B - A)") {
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    const double a = rng.uniform(-10.0, 10.0);
    const double b = rng.uniform(-10.0, 10.0);
    const double h = h_value(make_trig_config({a}, {b}));
    CHECK(h == doctest::Approx(2 - 2 * std::cos(b - a))
                   .epsilon(1e-12)
                   .scale(1.0));
  }
}

TEST_CASE("canonical point attains the claimed bound") {
  Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t r = rng.uniform_int(1, 5);
    const double a = rng.uniform(-5.0, 5.0);
    const double L = rng.uniform(-8.0, 8.0);
    std::vector<double> A(r, a), B(r, a);
    B[r - 1] = a + L;
    const double h = h_value(make_trig_config(A, B));
    CHECK(h == doctest::Approx(claimed_bound(L)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("check_lemma_h fixtures") {
  const ClaimReport eq =
      check_lemma_h(make_trig_config({0.3, 0.3}, {0.3, 2.1}), 1e-10);
  CHECK(eq.satisfied);
  CHECK(std::abs(eq.margin) <= 1e-12);

  Rng rng(44);
  for (int i = 0; i < 500; ++i) {
    const double a = rng.uniform(-5.0, 5.0);
    const double b = rng.uniform(-5.0, 5.0);
    const ClaimReport r = check_lemma_h(make_trig_config({a}, {b}), 1e-10);
    CHECK(r.satisfied);
    CHECK(std::abs(r.margin) <= 1e-12);
  }

  const ClaimReport d1 = check_lemma_h(make_trig_config({0, 0}, {1, 1}), 1e-10);
  CHECK_FALSE(d1.satisfied);
  CHECK(d1.margin ==
        doctest::Approx(16 * std::pow(std::sin(0.5), 2) -
                        4 * std::pow(std::sin(1.0), 2))
            .epsilon(1e-12));
}

TEST_CASE("multistart ascent fixtures") {
  // r = 1: the identity forces the canonical value
  const auto [c1, v1] = multistart_max_h(1, 1.3, 8, 5);
  CHECK(v1 == doctest::Approx(claimed_bound(1.3)).epsilon(1e-9));

  // r = 2, L = 2: at least the aligned two-pair family
  const auto [c2, v2] = multistart_max_h(2, 2.0, 64, 5);
  CHECK(v2 >= 16 * std::pow(std::sin(0.5), 2) - 1e-6);
  CHECK(v2 <= 16.0 + 1e-9);
  CHECK(c2.L() == doctest::Approx(2.0).epsilon(1e-12));

  // r = 2, L = 2pi: the two-semicircle configuration reaches 16
  const auto [c3, v3] = multistart_max_h(2, kTwoPi, 64, 5);
  CHECK(v3 >= 16.0 - 1e-6);

  // ascent dominance over the canonical point, and determinism
  Rng rng(45);
  for (int i = 0; i < 20; ++i) {
    const std::size_t r = rng.uniform_int(1, 4);
    const double L = rng.uniform(-6.0, 6.0);
    const auto [cfg, v] = multistart_max_h(r, L, 16, 99 + i);
    CHECK(v >= claimed_bound(L) - 1e-9);
    CHECK(v == doctest::Approx(multistart_max_h(r, L, 16, 99 + i).second));
    CHECK(h_value(cfg) == doctest::Approx(v).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("residue clustering counts tol-ball groups") {
  CHECK(residue_clusters({0.3, 0.3 + kTwoPi, 5.0}, 1e-9) == 2);
  CHECK(residue_clusters({1.1, 1.1, 1.1}, 1e-9) == 1);
  CHECK(residue_clusters({0.0, 1.0, 2.0}, 1e-9) == 3);
  CHECK(residue_clusters({0.0}, 1e-9) == 1);
  // wraparound: points straddling the cut belong to one cluster
  CHECK(residue_clusters({kTwoPi - 1e-12, 1e-12}, 1e-9) == 1);
  CHECK_THROWS_AS(residue_clusters({0.0}, 0.0), MalformedInputError);
}

TEST_CASE("reduced two-class maximization fixtures") {
  CHECK(max_sum_sin_reduced(1, 2.0, 500) ==
        doctest::Approx(std::abs(std::sin(2.0))).epsilon(1e-12));
  CHECK(max_sum_sin_reduced(4, 2.0, 500) >= 4 * std::sin(0.5) - 1e-3);
  CHECK(max_sum_sin_reduced(2, kPi, 500) >= 2.0 - 1e-3);
  CHECK_THROWS_AS(max_sum_sin_reduced(0, 1.0, 500), MalformedInputError);
  CHECK_THROWS_AS(max_sum_sin_reduced(2, 1.0, 10), MalformedInputError);
}

TEST_CASE("reduced maximization dominates the dense full grid for n <= 3") {
  Rng rng(46);
  for (int i = 0; i < 12; ++i) {
    const std::size_t n = rng.uniform_int(1, 3);
    const double L = rng.uniform(-6.0, 6.0);
    const double full = oracles::grid_max_sum_sin(n, L, n == 3 ? 160 : 3000);
    const double reduced = max_sum_sin_reduced(n, L, 4000);
    // the reduced parametrization contains the maximizers, so it can only
    // sit above the full grid, up to grid resolution on both sides
    CHECK(reduced >= full - 2e-3);
  }
}

TEST_CASE("check_lemma_sin_cluster holds on random instances") {
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.uniform_int(1, 3);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(-kPi, kPi);
    const ClaimReport r = check_lemma_sin_cluster(x, 2048, 1e-5);
    CHECK(r.satisfied);
  }
}
