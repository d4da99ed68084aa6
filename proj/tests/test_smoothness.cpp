#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "cweno/poly.hpp"
#include "cweno/quadrature.hpp"
#include "cweno/smoothness.hpp"

using namespace cweno;

namespace {

// sum_l h^(2l-1) * integral over the cell of (d^l p)^2 by Gauss quadrature, after
// substituting x = center + h s so the integral runs over s in [-1/2, 1/2]
double indicator_by_quadrature(const Poly& p, double h) {
  const QuadratureRule rule = gauss_legendre(10);
  std::vector<double> a(static_cast<std::size_t>(p.degree()) + 1);
  for (int i = 0; i <= p.degree(); ++i) a[static_cast<std::size_t>(i)] = p.coeff(i) * std::pow(h / p.scale(), i);
  Poly d(0.0, 1.0, a);
  double total = 0.0;
  for (int l = 1; l <= p.degree(); ++l) {
    d = d.derivative();
    total += cell_mean([&](double s) { return d(s) * d(s); }, -0.5, 0.5, rule);
  }
  return total;
}

}  // namespace

TEST_CASE("indicator of simple monomials") {
  const double h = 0.1;
  CHECK(jiang_shu(Poly::constant(4.0), h) == 0.0);
  const Poly lin(0.0, 1.0, std::vector<double>{0.0, 3.0});
  CHECK(jiang_shu(lin, h) == doctest::Approx(9.0 * h * h).epsilon(1e-14));
  const Poly quad(0.0, 1.0, std::vector<double>{0.0, 0.0, 2.0});
  CHECK(jiang_shu(quad, h) == doctest::Approx(13.0 / 3.0 * 4.0 * std::pow(h, 4)).epsilon(1e-14));
  // same function written in the scaled coordinate
  const Poly quad_scaled(0.0, h, std::vector<double>{0.0, 0.0, 2.0 * h * h});
  CHECK(jiang_shu(quad_scaled, h) == doctest::Approx(jiang_shu(quad, h)).epsilon(1e-14));
}

TEST_CASE("closed form agrees with quadrature on random polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_real_distribution<double> logh(-4.0, 0.0);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int k = deg(rng);
    const double h = std::pow(10.0, logh(rng));
    const double scale = trial % 2 ? h : 1.0;
    std::vector<double> c(static_cast<std::size_t>(k) + 1);
    for (auto& v : c) v = U(rng);
    const Poly p(U(rng), scale, c);
    const double closed = jiang_shu(p, h);
    const double quad = indicator_by_quadrature(p, h);
    CHECK(closed >= 0.0);
    if (quad > 0.0) worst = std::max(worst, std::abs(closed - quad) / quad);
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("indicator is a quadratic form") {
  const Poly p(0.0, 1.0, std::vector<double>{0.3, -1.2, 0.7, 0.05});
  Poly q = p;
  q *= -3.5;
  CHECK(jiang_shu(q, 0.2) == doctest::Approx(12.25 * jiang_shu(p, 0.2)).epsilon(1e-14));
}

TEST_CASE("interval overload requires a centered polynomial") {
  const Poly p(0.5, 1.0, std::vector<double>{0.0, 1.0});
  CHECK(jiang_shu(p, 0.25, 0.75) == doctest::Approx(0.25));
  CHECK_THROWS(jiang_shu(p, 0.0, 0.75));
}

TEST_CASE("indicator is O(h^2) on smooth data and O(1) across a jump") {
  std::vector<double> logh, logi;
  for (int e = 4; e <= 10; ++e) {
    const double h = std::ldexp(1.0, -e);
    // quadratic interpolant of sin at x = 0.4, scaled coordinate
    const double u1 = std::cos(0.4) * h;
    const double u2 = -std::sin(0.4) * h * h / 2;
    const Poly p(0.4, h, std::vector<double>{std::sin(0.4), u1, u2});
    logh.push_back(std::log(h));
    logi.push_back(std::log(jiang_shu(p, h)));
  }
  const double slope = (logi.back() - logi.front()) / (logh.back() - logh.front());
  CHECK(slope >= 1.8);
  CHECK(slope <= 2.2);
}

TEST_CASE("gauss rule integrates polynomials exactly") {
  for (int n = 1; n <= 12; ++n) {
    const QuadratureRule r = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-15));
    // mean of x^(2n-2) over [0, 1]
    const int k = 2 * n - 1;
    const double mean = cell_mean([&](double x) { return std::pow(x, k); }, 0.0, 1.0, r);
    CHECK(mean == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
  }
}
