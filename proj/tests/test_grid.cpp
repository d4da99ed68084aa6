#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cweno/grid.hpp"

using namespace cweno;

TEST_CASE("uniform grid geometry") {
  const Grid1D g = make_uniform(-1.0, 1.0, 40, Boundary::periodic);
  CHECK(g.cells() == 40);
  CHECK(g.a() == -1.0);
  CHECK(g.b() == 1.0);
  CHECK(g.size(3) == doctest::Approx(0.05));
  CHECK(g.center(0) == doctest::Approx(-0.975));
  CHECK(g.is_uniform(1e-10));
  double total = 0.0;
  for (double h : g.sizes()) total += h;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("grid construction rejects bad input") {
  CHECK_THROWS_AS(make_uniform(0.0, 1.0, 0, Boundary::outflow), std::invalid_argument);
  CHECK_THROWS_AS(make_uniform(1.0, 0.0, 4, Boundary::outflow), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D({0.0, 0.5, 0.5, 1.0}, Boundary::outflow), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D({0.0, NAN, 1.0}, Boundary::outflow), std::invalid_argument);
  CHECK_THROWS_AS(make_random_nonuniform(0.0, 1.0, 8, 1, 0.5, Boundary::outflow), std::invalid_argument);
}

TEST_CASE("boundary names") {
  CHECK(parse_boundary("periodic") == Boundary::periodic);
  CHECK(parse_boundary("outflow") == Boundary::outflow);
  CHECK(parse_boundary("free") == Boundary::outflow);
  CHECK(parse_boundary("reflective") == Boundary::reflective);
  CHECK(to_string(Boundary::reflective) == "reflective");
  CHECK_THROWS(parse_boundary("sideways"));
}

TEST_CASE("random grid respects the size ratio and is seed-deterministic") {
  const Grid1D g1 = make_random_nonuniform(0.0, 1.0, 64, 7, 3.0, Boundary::periodic);
  const Grid1D g2 = make_random_nonuniform(0.0, 1.0, 64, 7, 3.0, Boundary::periodic);
  const Grid1D g3 = make_random_nonuniform(0.0, 1.0, 64, 8, 3.0, Boundary::periodic);
  CHECK(g1.max_size() / g1.min_size() <= 3.0);
  CHECK_FALSE(g1.is_uniform(1e-6));
  CHECK(g1.a() == 0.0);
  CHECK(g1.b() == 1.0);
  for (int j = 0; j <= 64; ++j) CHECK(g1.edges()[static_cast<std::size_t>(j)] == g2.edges()[static_cast<std::size_t>(j)]);
  bool differs = false;
  for (int j = 0; j < 64; ++j) differs = differs || g1.size(j) != g3.size(j);
  CHECK(differs);
  CHECK(make_random_nonuniform(0.0, 1.0, 16, 1, 1.0, Boundary::outflow).is_uniform());
}

TEST_CASE("ghost cells follow the boundary rule") {
  const std::vector<double> u = {1.0, 2.0, 3.0, 4.0};
  std::vector<double> padded(8);
  GhostPad pad{2};

  pad.fill(make_uniform(0.0, 1.0, 4, Boundary::periodic), 1, u, padded);
  CHECK(padded == std::vector<double>{3, 4, 1, 2, 3, 4, 1, 2});

  pad.fill(make_uniform(0.0, 1.0, 4, Boundary::outflow), 1, u, padded);
  CHECK(padded == std::vector<double>{1, 1, 1, 2, 3, 4, 4, 4});

  // two components, second one odd under reflection
  const std::vector<double> v = {1, 10, 2, 20, 3, 30};
  std::vector<double> pv(14);
  const bool odd[] = {false, true};
  GhostPad{2}.fill(make_uniform(0.0, 1.0, 3, Boundary::reflective), 2, v, pv, odd);
  CHECK(pv == std::vector<double>{2, -20, 1, -10, 1, 10, 2, 20, 3, 30, 3, -30, 2, -20});
}

TEST_CASE("padded sizes wrap or mirror") {
  const Grid1D g({0.0, 0.1, 0.3, 0.6, 1.0}, Boundary::periodic);
  CHECK(g.padded_size(-1) == doctest::Approx(0.4));
  CHECK(g.padded_size(4) == doctest::Approx(0.1));
  const Grid1D o({0.0, 0.1, 0.3, 0.6, 1.0}, Boundary::outflow);
  CHECK(o.padded_size(-1) == doctest::Approx(0.1));
  CHECK(o.padded_size(-2) == doctest::Approx(0.2));
  CHECK(o.padded_size(5) == doctest::Approx(0.3));
}
