#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "cweno/poly.hpp"

using namespace cweno;

namespace {

// gamma_{r,i,m} by the nested-sum definition: sum over m-subsets removed from the
// product of the nodes l - r - 1/2, l = 0..i-1.
double gamma_nested(int r, int i, int m) {
  if (m > i) return 0.0;
  if (m == i) return 1.0;
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << i); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    double prod = 1.0;
    for (int l = 0; l < i; ++l) {
      if (!(mask & (1u << l))) prod *= l - r - 0.5;
    }
    total += prod;
  }
  return ((i - m) % 2 ? -1.0 : 1.0) * total;
}

// Exact averages over cells [e_j, e_{j+1}] of the polynomial with monomial coefficients c.
std::vector<double> poly_averages(const std::vector<double>& c, const std::vector<double>& edges) {
  auto prim = [&](double x) {
    double s = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k] / static_cast<double>(k + 1);
    return s * x;
  };
  std::vector<double> out;
  for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
    out.push_back((prim(edges[j + 1]) - prim(edges[j])) / (edges[j + 1] - edges[j]));
  }
  return out;
}

double poly_value(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
  return s;
}

}  // namespace

TEST_CASE("Gamma table matches the published uniform-grid values exactly") {
  const double r3[7][7] = {
      {1},
      {6, 2},
      {71.0 / 4, 15, 3},
      {22, 43, 24, 4},
      {-71.0 / 16, 45.0 / 2, 105.0 / 2, 30, 5},
      {27.0 / 8, -341.0 / 8, -45, 25, 30, 6},
      {-225.0 / 64, 1813.0 / 16, 777.0 / 16, -245.0 / 2, -175.0 / 4, 21, 7}};
  const double r2[5][5] = {{1}, {4, 2}, {23.0 / 4, 9, 3}, {-1, 7, 12, 4}, {9.0 / 16, -25.0 / 2, -15.0 / 2, 10, 5}};
  const double r1[4][4] = {{1}, {2, 2}, {-1.0 / 4, 3, 3}, {0, -5, 0, 4}};
  const double r0[4][4] = {{1}, {0, 2}, {-1.0 / 4, -3, 3}, {1, 7, -12, 4}};
  for (int i = 1; i <= 7; ++i)
    for (int m = 1; m <= i; ++m) CHECK(big_gamma_uniform(3, i, m) == r3[i - 1][m - 1]);
  for (int i = 1; i <= 5; ++i)
    for (int m = 1; m <= i; ++m) CHECK(big_gamma_uniform(2, i, m) == r2[i - 1][m - 1]);
  for (int i = 1; i <= 4; ++i)
    for (int m = 1; m <= i; ++m) {
      CHECK(big_gamma_uniform(1, i, m) == r1[i - 1][m - 1]);
      CHECK(big_gamma_uniform(0, i, m) == r0[i - 1][m - 1]);
    }
  static_assert(big_gamma_uniform(3, 7, 7) == 7.0);
  static_assert(big_gamma_uniform(1, 2, 1) == 2.0);
  CHECK(big_gamma_uniform(0, 3, 4) == 0.0);
}

TEST_CASE("Gamma table agrees with the nested-sum definition") {
  for (int r = 0; r <= 4; ++r)
    for (int i = 1; i <= 5; ++i)
      for (int m = 1; m <= i; ++m) CHECK(gamma_uniform(r, i, m) == doctest::Approx(gamma_nested(r, i, m)).epsilon(1e-15));
}

TEST_CASE("GammaTable storage") {
  const GammaTable t = GammaTable::uniform(3, 7);
  CHECK(t.size() == 7);
  CHECK(t.offset() == 3);
  CHECK(t(6, 2) == -341.0 / 8);
  CHECK(t(2, 5) == 0.0);
}

TEST_CASE("nonuniform weights reduce to the uniform ones on unit cells") {
  const std::vector<double> ones(9, 1.0);
  const StencilGeometry geo{ones, -4, 0.0};
  for (int r = 0; r <= 4; ++r)
    for (int i = 1; i <= 5 && i - r - 1 <= 4; ++i)
      for (int m = 1; m <= i; ++m) {
        CHECK(gamma_nonuniform(r, i, m, geo) == doctest::Approx(gamma_uniform(r, i, m)).epsilon(1e-14));
      }
}

TEST_CASE("edge positions measured from the reference center") {
  const std::vector<double> h = {0.3, 0.2, 0.5, 0.4};  // offsets -2..1
  const StencilGeometry geo{h, -2, 0.0};
  CHECK(edge_position(geo, 0) == doctest::Approx(-0.25));
  CHECK(edge_position(geo, 1) == doctest::Approx(0.25));
  CHECK(edge_position(geo, -1) == doctest::Approx(-0.45));
  CHECK(edge_position(geo, -2) == doctest::Approx(-0.75));
  CHECK(edge_position(geo, 2) == doctest::Approx(0.65));
}

TEST_CASE("difference tables satisfy the recurrence") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::uniform_real_distribution<double> H(0.5, 2.0);
  std::vector<double> u(7), h(7);
  for (auto& v : u) v = U(rng);
  for (auto& v : h) v = H(rng);
  const DiffTable div = build_diff_table(u, h, DiffMode::divided, -3);
  const DiffTable und = build_diff_table(u, {}, DiffMode::undivided, -3);
  CHECK(div.base() == -3);
  CHECK(div.last() == 3);
  for (int j = -3; j <= 3; ++j) {
    CHECK(div(j, 1) == u[static_cast<std::size_t>(j + 3)]);
    CHECK(und(j, 1) == u[static_cast<std::size_t>(j + 3)]);
  }
  for (int p = 2; p <= 7; ++p)
    for (int j = -3; j + p - 1 <= 3; ++j) {
      double span = 0.0;
      for (int i = j; i <= j + p - 1; ++i) span += h[static_cast<std::size_t>(i + 3)];
      CHECK(div(j, p) == doctest::Approx((div(j + 1, p - 1) - div(j, p - 1)) / span).epsilon(1e-14));
      CHECK(und(j, p) == doctest::Approx((und(j + 1, p - 1) - und(j, p - 1)) / p).epsilon(1e-14));
    }
  CHECK_FALSE(div.contains(-3, 8));
  CHECK_THROWS_AS(div(2, 3), std::out_of_range);
  CHECK_THROWS_AS(build_diff_table(u, std::vector<double>(3, 1.0), DiffMode::divided), std::invalid_argument);
  std::vector<double> bad = h;
  bad[2] = 0.0;
  CHECK_THROWS_AS(build_diff_table(u, bad, DiffMode::divided), std::invalid_argument);
}

TEST_CASE("interpolants reproduce polynomials on uniform and nonuniform stencils") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::uniform_real_distribution<double> H(0.6, 1.7);
  for (int trial = 0; trial < 20; ++trial) {
    const bool uniform = trial % 2 == 0;
    const double scale = 0.05;
    std::vector<double> h(9);
    for (auto& v : h) v = uniform ? scale : scale * H(rng);
    // edges with the reference cell (offset 0, index 4) centered at x0
    const double x0 = 0.3;
    std::vector<double> edges(10);
    edges[4] = x0 - h[4] / 2;
    for (int j = 4; j < 9; ++j) edges[static_cast<std::size_t>(j + 1)] = edges[static_cast<std::size_t>(j)] + h[static_cast<std::size_t>(j)];
    for (int j = 4; j > 0; --j) edges[static_cast<std::size_t>(j - 1)] = edges[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(j - 1)];
    const StencilGeometry geo{h, -4, x0};
    for (int k = 0; k <= 8; ++k) {
      std::vector<double> c(static_cast<std::size_t>(k) + 1);
      for (auto& v : c) v = U(rng);
      const std::vector<double> avg = poly_averages(c, edges);
      const DiffTable diffs = uniform ? build_diff_table(avg, {}, DiffMode::undivided, -4)
                                      : build_diff_table(avg, h, DiffMode::divided, -4);
      for (int r = std::max(0, k - 4); r <= std::min(k, 4); ++r) {
        Poly p = interpolant(k, r, diffs, geo);
        p = Poly(x0, p.scale(), p.coeffs());
        for (double x : {x0 - h[4] / 2, x0, x0 + 0.2 * h[4], x0 + h[4] / 2}) {
          CHECK(p(x) == doctest::Approx(poly_value(c, x)).epsilon(1e-9).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("interpolant preserves the stencil averages") {
  const std::vector<double> avg = {0.0, 1.0, 4.0, -2.0, 0.5};
  const std::vector<double> h = {0.1, 0.3, 0.2, 0.25, 0.15};
  const StencilGeometry geo{h, -2, 0.0};
  const DiffTable diffs = build_diff_table(avg, h, DiffMode::divided, -2);
  const Poly p = interpolant(4, 2, diffs, geo);
  double left = -0.1 - 0.3 - 0.1;
  for (int j = 0; j < 5; ++j) {
    const double right = left + h[static_cast<std::size_t>(j)];
    CHECK(cell_average(p, left, right) == doctest::Approx(avg[static_cast<std::size_t>(j)]).epsilon(1e-12));
    left = right;
  }
  CHECK_THROWS_AS(interpolant(4, 2, diffs, GammaTable::uniform(2, 3), 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic, derivative and rescaling") {
  const std::vector<double> c = {1.0, -2.0, 3.0};
  const Poly p(1.0, 0.5, c);  // 1 - 2 xi + 3 xi^2, xi = (x - 1) / 0.5
  CHECK(p.degree() == 2);
  CHECK(p(1.0) == 1.0);
  CHECK(p(1.5) == doctest::Approx(2.0));
  const Poly d = p.derivative();
  CHECK(d(1.5) == doctest::Approx((-2.0 + 6.0) / 0.5));
  const Poly q = p.rescaled(2.0);
  for (double x : {0.0, 0.7, 1.3, 2.0}) CHECK(q(x) == doctest::Approx(p(x)));
  Poly s = p;
  s += Poly::constant(2.0, 1.0, 0.5);
  CHECK(s(1.5) == doctest::Approx(4.0));
  s *= 2.0;
  CHECK(s(1.0) == doctest::Approx(6.0));
  CHECK_THROWS(s += Poly::constant(1.0, 0.0, 0.5));
  CHECK(cell_average(Poly::constant(3.0), -1.0, 2.0) == doctest::Approx(3.0));
  const Poly lin(0.0, 1.0, std::vector<double>{0.0, 1.0});
  CHECK(cell_average(lin, 0.0, 2.0) == doctest::Approx(1.0));
}
