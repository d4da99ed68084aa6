#include "doctest.h"

#include <cmath>
#include <random>

#include "cweno/models.hpp"

using namespace cweno;

namespace {

void check_inverse_pair(const Eigensystem& e) {
  for (int i = 0; i < e.m; ++i)
    for (int j = 0; j < e.m; ++j) {
      double s = 0.0;
      for (int k = 0; k < e.m; ++k) s += e.l(i, k) * e.r(k, j);
      CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));
    }
}

// finite-difference Jacobian against R diag(lambda) L
void check_jacobian(const Model& model, const State& u) {
  const Eigensystem e = model.eigensystem(u);
  const int m = model.components();
  for (int j = 0; j < m; ++j) {
    State up = u, um = u;
    const double d = 1e-6 * std::max(1.0, std::abs(u[static_cast<std::size_t>(j)]));
    up[static_cast<std::size_t>(j)] += d;
    um[static_cast<std::size_t>(j)] -= d;
    const State fp = model.flux(up), fm = model.flux(um);
    for (int i = 0; i < m; ++i) {
      const double fd = (fp[static_cast<std::size_t>(i)] - fm[static_cast<std::size_t>(i)]) / (2 * d);
      double jac = 0.0;
      for (int k = 0; k < m; ++k) jac += e.r(i, k) * e.lambda[static_cast<std::size_t>(k)] * e.l(k, j);
      CHECK(jac == doctest::Approx(fd).scale(1.0).epsilon(1e-6));
    }
  }
  double rho = 0.0;
  for (int k = 0; k < m; ++k) rho = std::max(rho, std::abs(e.lambda[static_cast<std::size_t>(k)]));
  CHECK(model.max_speed(u) >= rho * (1 - 1e-14));
}

}  // namespace

TEST_CASE("scalar models") {
  const Advection adv;
  const Burgers burgers;
  CHECK(adv.flux({3.0, 0, 0})[0] == 3.0);
  CHECK(burgers.flux({2.0, 0, 0})[0] == 2.0);
  CHECK(burgers.max_speed({-2.0, 0, 0}) == 2.0);
  const Eigensystem e = burgers.eigensystem({1.5, 0, 0});
  CHECK(e.r(0, 0) == 1.0);
  CHECK(e.lambda[0] == doctest::Approx(1.5));
  CHECK_FALSE(adv.has_source());
}

TEST_CASE("Euler pressure, conserved variables and eigenvectors") {
  const Euler euler(1.4);
  CHECK(euler.pressure({1.0, 0.0, 2.5}) == doctest::Approx(1.0));
  const State lax = euler.conserved(0.445, 0.6989, 3.5277);
  CHECK(lax[2] == doctest::Approx(3.5277 / 0.4 + 0.5 * 0.445 * 0.6989 * 0.6989));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> rho(0.1, 5.0), vel(-3.0, 3.0), p(0.05, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const State u = euler.conserved(rho(rng), vel(rng), p(rng));
    check_inverse_pair(euler.eigensystem(u));
    if (trial % 10 == 0) check_jacobian(euler, u);
  }
  CHECK_THROWS_AS(euler.eigensystem({-1.0, 0.0, 1.0}), StateError);
  CHECK_THROWS_AS(euler.eigensystem({1.0, 0.0, -1.0}), StateError);
  CHECK_THROWS_AS(Euler(1.0), std::invalid_argument);
}

TEST_CASE("radial Euler geometric source") {
  const RadialEuler radial(3);
  const State s = radial.source(radial.conserved(1.0, 1.0, 1.0), 0.5);
  CHECK(s[0] == doctest::Approx(-4.0));
  CHECK(s[1] == doctest::Approx(-4.0));
  CHECK(s[2] == doctest::Approx(-4.0));
  const State rest = radial.source(radial.conserved(1.0, 0.0, 1.0), -0.3);
  CHECK(rest[0] == 0.0);
  CHECK(rest[1] == 0.0);
  CHECK(rest[2] == 0.0);
  // mirrored state at -x gives the mirrored source
  const State mirrored = radial.source(radial.conserved(0.7, -0.4, 2.0), -0.25);
  const State direct = radial.source(radial.conserved(0.7, 0.4, 2.0), 0.25);
  CHECK(mirrored[0] == doctest::Approx(direct[0]));
  CHECK(mirrored[1] == doctest::Approx(-direct[1]));
  CHECK(mirrored[2] == doctest::Approx(direct[2]));
  CHECK_THROWS_AS(radial.source(radial.conserved(1.0, 1.0, 1.0), 0.0), SingularPointError);
  CHECK_THROWS_AS(RadialEuler(4), std::invalid_argument);
  const RadialEuler enthalpy(3, 1.4, true);
  CHECK(enthalpy.source(enthalpy.conserved(1.0, 1.0, 1.0), 0.5)[2] == doctest::Approx(-4.0 * (3.0 + 1.0)));
}

TEST_CASE("shallow water") {
  const ShallowWater swe(9.81);
  const Eigensystem e = swe.eigensystem({1.0, 2.0, 0});
  CHECK(e.lambda[0] == doctest::Approx(2.0 - std::sqrt(9.81)));
  CHECK(e.lambda[1] == doctest::Approx(2.0 + std::sqrt(9.81)));
  check_inverse_pair(e);
  check_jacobian(swe, {1.3, -0.4, 0});
  CHECK(swe.flux({2.0, 0.0, 0})[1] == doctest::Approx(0.5 * 9.81 * 4.0));
  CHECK_THROWS_AS(swe.eigensystem({0.0, 0.0, 0}), StateError);
  CHECK_THROWS_AS(ShallowWater(0.0), std::invalid_argument);
  // lake at rest: pressure gradient balances the bottom source pointwise
  const double pi = std::acos(-1.0);
  const ShallowWater hill(9.81, Topography::analytic([&](double x) { return std::sin(pi * x) * std::sin(pi * x); },
                                                    [&](double x) { return pi * std::sin(2 * pi * x); }));
  const double x = 0.3, dx = 1e-6;
  auto h = [&](double y) { return 1.5 - hill.bottom().z(y); };
  const double dflux = (hill.flux({h(x + dx), 0, 0})[1] - hill.flux({h(x - dx), 0, 0})[1]) / (2 * dx);
  CHECK(hill.source({h(x), 0, 0}, x)[1] == doctest::Approx(dflux).epsilon(1e-6));
  CHECK_THROWS(ShallowWater(9.81, Topography::from_averages({0.1, 0.2})).source({1, 0, 0}, 0.0));
}

TEST_CASE("model factory") {
  CHECK(make_model("burgers")->name() == "burgers");
  CHECK(make_model("euler")->components() == 3);
  CHECK(make_model("swe")->components() == 2);
  CHECK(make_model("euler_radial2")->has_source());
  CHECK_THROWS_AS(make_model("mhd"), std::invalid_argument);
}
