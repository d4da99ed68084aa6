#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "cweno/reconstruction.hpp"
#include "cweno/smoothness.hpp"

using namespace cweno;

namespace {

std::vector<double> sin_averages(int g, double x0, double h) {
  std::vector<double> u;
  for (int j = -g; j <= g; ++j) {
    const double a = x0 + (j - 0.5) * h;
    u.push_back((std::cos(a) - std::cos(a + h)) / h);
  }
  return u;
}

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("linear coefficients") {
  auto d = linear_coefficients(2, 0.75);
  REQUIRE(d.size() == 4);
  CHECK(d[1] == doctest::Approx(1.0 / 16));
  CHECK(d[2] == doctest::Approx(1.0 / 8));
  CHECK(d[3] == doctest::Approx(1.0 / 16));
  d = linear_coefficients(3, 0.4);
  CHECK(d[1] == doctest::Approx(0.6 / 6));
  CHECK(d[2] == doctest::Approx(0.6 / 3));
  CHECK(d[3] == doctest::Approx(0.6 / 3));
  CHECK(d[4] == doctest::Approx(0.6 / 6));
  d = linear_coefficients(1, 0.5);
  CHECK(d[1] == 0.25);
  CHECK(d[2] == 0.25);
  for (int g = 1; g <= 4; ++g) CHECK(sum(linear_coefficients(g, 0.3)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(linear_coefficients(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(linear_coefficients(2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(linear_coefficients(5, 0.5), std::invalid_argument);
}

TEST_CASE("config validation") {
  CHECK(CwenoConfig::for_order(7).g == 3);
  CHECK_THROWS_AS(CwenoConfig::for_order(4), std::invalid_argument);
  CwenoConfig c = CwenoConfig::for_order(5);
  c.t = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = CwenoConfig::for_order(5);
  c.d[1] += 0.01;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = CwenoConfig::for_order(5);
  c.eps_power = 3;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(CwenoConfig::for_order(5, 0.75, 2.0, 1).epsilon(0.1) == doctest::Approx(0.2));
}

TEST_CASE("third order on a jump: hand-derived indicator ratio") {
  // P_opt = -1/24 - x/2 + x^2/2, left line -x, right line 0 (x in cell units);
  // P_0 = (-1/24 - d0 x/2 + x^2/2) / d0, so I[P_0]/I[P_opt] = (3 d0^2 + 13) / (16 d0^2).
  const std::vector<double> u = {1.0, 0.0, 0.0};
  const std::vector<double> h(3, 1.0 / 64);
  for (double d0 : {0.25, 0.5, 0.75, 0.999999}) {
    const CwenoResult r = cweno_reconstruct(u, StencilGeometry{h, -1, 0.0}, CwenoConfig::for_order(3, d0));
    const double ratio = r.indicators[0] / r.optimal_indicator;
    CHECK(ratio == doctest::Approx((3 * d0 * d0 + 13) / (16 * d0 * d0)).epsilon(1e-12));
    CHECK(r.optimal_indicator == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  }
  const CwenoResult half = cweno_reconstruct(u, StencilGeometry{h, -1, 0.0}, CwenoConfig::for_order(3, 0.5));
  CHECK(half.indicators[0] / half.optimal_indicator == doctest::Approx(3.4375).epsilon(1e-12));
}

TEST_CASE("weights are normalized and the cell average is conserved") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  std::uniform_real_distribution<double> H(0.5, 1.5);
  for (int g = 1; g <= 4; ++g) {
    const CwenoReconstructor rec(CwenoConfig::for_order(2 * g + 1, 0.75));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> u(static_cast<std::size_t>(2 * g + 1));
      for (auto& v : u) v = trial % 3 == 0 ? (U(rng) > 0 ? 1.0 : 0.0) : U(rng);
      std::vector<double> h(u.size());
      for (auto& v : h) v = trial % 2 ? 0.01 : 0.01 * H(rng);
      const double c = 0.37;
      const CwenoResult r = rec.reconstruct(u, StencilGeometry{h, -g, c});
      CHECK(std::abs(sum(r.omegas) - 1.0) <= 1e-14);
      for (double w : r.omegas) CHECK(w >= 0.0);
      const double hc = h[static_cast<std::size_t>(g)];
      const double avg = cell_average(r.rec, c - hc / 2, c + hc / 2);
      const double ubar = u[static_cast<std::size_t>(g)];
      CHECK(std::abs(avg - ubar) <= 1e-13 * std::max(1.0, std::abs(ubar)));
    }
  }
}

TEST_CASE("polynomial data of degree up to g is reproduced") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::uniform_real_distribution<double> H(0.5, 1.5);
  for (int g = 1; g <= 4; ++g) {
    const CwenoReconstructor rec(CwenoConfig::for_order(2 * g + 1));
    for (int trial = 0; trial < 10; ++trial) {
      const bool uniform = trial % 2 == 0;
      std::vector<double> h(static_cast<std::size_t>(2 * g + 1));
      for (auto& v : h) v = uniform ? 0.1 : 0.1 * H(rng);
      std::vector<double> edges(h.size() + 1, 0.0);
      for (std::size_t j = 0; j < h.size(); ++j) edges[j + 1] = edges[j] + h[j];
      const double center = 0.5 * (edges[static_cast<std::size_t>(g)] + edges[static_cast<std::size_t>(g) + 1]);
      std::vector<double> c(static_cast<std::size_t>(g) + 1);
      for (auto& v : c) v = U(rng);
      auto f = [&](double x) {
        double s = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
        return s;
      };
      auto prim = [&](double x) {
        double s = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k] / static_cast<double>(k + 1);
        return s * x;
      };
      std::vector<double> u(h.size());
      for (std::size_t j = 0; j < h.size(); ++j) u[j] = (prim(edges[j + 1]) - prim(edges[j])) / h[j];
      const CwenoResult r = rec.reconstruct(u, StencilGeometry{h, -g, center});
      for (double s : {-0.5, -0.1, 0.0, 0.3, 0.5}) {
        const double x = center + s * h[static_cast<std::size_t>(g)];
        CHECK(r.rec(x) == doctest::Approx(f(x)).epsilon(1e-10).scale(1.0));
        CHECK(r.optimal(x) == doctest::Approx(f(x)).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("constant data are reconstructed bit-exactly") {
  for (int g = 1; g <= 4; ++g) {
    const std::vector<double> u(static_cast<std::size_t>(2 * g + 1), 0.8123456789);
    const std::vector<double> h = {0.013, 0.02, 0.011, 0.017, 0.019, 0.012, 0.015, 0.018, 0.014};
    const CwenoResult r = cweno_reconstruct(u, StencilGeometry{std::span<const double>(h.data(), u.size()), -g, 1.0},
                                            CwenoConfig::for_order(2 * g + 1));
    CHECK(r.rec(1.0) == 0.8123456789);
    CHECK(r.rec(1.0 + 0.5 * h[static_cast<std::size_t>(g)]) == 0.8123456789);
  }
}

TEST_CASE("selection is scale invariant without epsilon") {
  CwenoConfig cfg = CwenoConfig::for_order(5);
  cfg.eps_hat = 0.0;
  const std::vector<double> u = {0.1, 0.4, 1.3, 0.2, -0.5};
  std::vector<double> v = u;
  for (auto& x : v) x *= 7.5;
  const std::vector<double> h(5, 0.1);
  const CwenoResult a = cweno_reconstruct(u, StencilGeometry{h, -2, 0.0}, cfg);
  const CwenoResult b = cweno_reconstruct(v, StencilGeometry{h, -2, 0.0}, cfg);
  for (std::size_t k = 0; k < a.omegas.size(); ++k) {
    CHECK(b.omegas[k] == doctest::Approx(a.omegas[k]).epsilon(1e-13));
    CHECK(b.indicators[k] == doctest::Approx(56.25 * a.indicators[k]).epsilon(1e-13));
  }
}

TEST_CASE("a jump away from the central cell switches off the crossing stencils") {
  const double h = std::ldexp(1.0, -8);
  for (int g = 1; g <= 4; ++g) {
    // smooth ramp on the left, jump between offsets g-1 and g
    std::vector<double> u;
    for (int j = -g; j <= g; ++j) u.push_back(j < g ? 1.0 + 0.1 * j * h : 0.0);
    const std::vector<double> hs(u.size(), h);
    const CwenoResult r = cweno_reconstruct(u, StencilGeometry{hs, -g, 0.0}, CwenoConfig::for_order(2 * g + 1));
    CHECK(r.omegas[0] <= 1e-2);  // P_0 spans the whole stencil
    // candidate k covers offsets k-1-g .. k-1; only k = g+1 reaches offset g
    CHECK(r.omegas[static_cast<std::size_t>(g + 1)] <= 1e-2);
  }
}

TEST_CASE("weights approach the linear coefficients on smooth data") {
  for (int p = 1; p <= 2; ++p) {
    for (int g = 1; g <= 4; ++g) {
      const CwenoReconstructor rec(CwenoConfig::for_order(2 * g + 1, 0.75, 1.0, p));
      std::vector<double> le, lh;
      for (int e = 4; e <= 7; ++e) {
        const double h = std::ldexp(1.0, -e);
        const auto u = sin_averages(g, 0.7, h);
        const std::vector<double> hs(u.size(), h);
        const CwenoResult r = rec.reconstruct(u, StencilGeometry{hs, -g, 0.7});
        double dev = 0.0;
        for (std::size_t k = 0; k < r.omegas.size(); ++k) dev = std::max(dev, std::abs(r.omegas[k] - rec.config().d[k]));
        le.push_back(std::log(dev));
        lh.push_back(std::log(h));
      }
      const double slope = (le.back() - le.front()) / (lh.back() - lh.front());
      CAPTURE(p);
      CAPTURE(g);
      CHECK(std::abs(slope - (g + 2 - p)) <= 0.4);
    }
  }
}

TEST_CASE("classical WENO optimal weights at cell boundaries") {
  auto d = weno_linear_weights(1, 0.5);
  CHECK(d[0] == doctest::Approx(1.0 / 3));
  CHECK(d[1] == doctest::Approx(2.0 / 3));
  d = weno_linear_weights(2, 0.5);
  CHECK(d[0] == doctest::Approx(0.1));
  CHECK(d[1] == doctest::Approx(0.6));
  CHECK(d[2] == doctest::Approx(0.3));
  d = weno_linear_weights(3, 0.5);
  const double w7[] = {1.0 / 35, 12.0 / 35, 18.0 / 35, 4.0 / 35};
  for (int k = 0; k < 4; ++k) CHECK(d[static_cast<std::size_t>(k)] == doctest::Approx(w7[k]));
  d = weno_linear_weights(4, 0.5);
  const double w9[] = {1.0 / 126, 20.0 / 126, 60.0 / 126, 40.0 / 126, 5.0 / 126};
  for (int k = 0; k < 5; ++k) CHECK(d[static_cast<std::size_t>(k)] == doctest::Approx(w9[k]));
  d = weno_linear_weights(2, -0.5);
  CHECK(d[0] == doctest::Approx(0.3));
  CHECK(d[2] == doctest::Approx(0.1));
  CHECK_THROWS_AS(weno_linear_weights(2, 0.0), std::domain_error);
  CHECK_THROWS_AS(weno_reconstruct_point(std::vector<double>(5, 1.0), 0.25, 2, 1e-6, 2), std::domain_error);
}

TEST_CASE("classical WENO point values") {
  for (int g = 1; g <= 4; ++g) {
    const std::vector<double> u(static_cast<std::size_t>(2 * g + 1), 2.5);
    CHECK(weno_reconstruct_point(u, 0.5, g, 1e-6, 2) == doctest::Approx(2.5));
    // smooth data: error decays with order 2g+1
    std::vector<double> err;
    const int e0 = g <= 2 ? 4 : 2;
    for (int e = e0; e <= e0 + 2; ++e) {
      const double h = std::ldexp(1.0, -e);
      const auto s = sin_averages(g, 0.3, h);
      err.push_back(std::abs(weno_reconstruct_point(s, 0.5, g, h * h, 2) - std::sin(0.3 + h / 2)));
    }
    const double slope = std::log2(err[1] / err[2]);
    CAPTURE(g);
    CHECK(std::abs(slope - (2 * g + 1)) <= 0.3);
  }
  // jump beyond the right neighbour: value follows the smooth linear data
  const double h = 0.01;
  const std::vector<double> u = {1.0 - 2 * h, 1.0 - h, 1.0, 1.0 + h, 0.0};
  CHECK(weno_reconstruct_point(u, 0.5, 2, h * h, 2) == doctest::Approx(1.0 + h / 2).epsilon(1e-3));
}
