#include "cweno/models.hpp"

#include <cmath>
#include <sstream>

namespace cweno {

State Eigensystem::to_characteristic(const State& u) const {
  State w{};
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += l(i, j) * u[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(i)] = s;
  }
  return w;
}

State Eigensystem::from_characteristic(const State& w) const {
  State u{};
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += r(i, j) * w[static_cast<std::size_t>(j)];
    u[static_cast<std::size_t>(i)] = s;
  }
  return u;
}

Eigensystem Model::eigensystem(const State& u) const {
  if (components() != 1) throw std::logic_error(name() + ": eigensystem not available");
  Eigensystem e;
  e.m = 1;
  e.R[0] = 1.0;
  e.L[0] = 1.0;
  // speed of a scalar law: derivative of the flux, by symmetric difference
  const double du = 1e-7 * std::max(1.0, std::abs(u[0]));
  e.lambda[0] = (flux({u[0] + du, 0, 0})[0] - flux({u[0] - du, 0, 0})[0]) / (2 * du);
  return e;
}

State Model::source(const State&, double) const { return {}; }

namespace {

std::string describe(const State& u, int m) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < m; ++i) os << (i ? ", " : "") << u[static_cast<std::size_t>(i)];
  os << ")";
  return os.str();
}

}  // namespace

Euler::Euler(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0)) throw std::invalid_argument("euler: gamma must exceed 1");
}

double Euler::pressure(const State& u) const {
  return (gamma_ - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
}

State Euler::conserved(double rho, double vel, double p) const {
  return {rho, rho * vel, p / (gamma_ - 1.0) + 0.5 * rho * vel * vel};
}

State Euler::flux(const State& u) const {
  const double vel = u[1] / u[0];
  const double p = pressure(u);
  return {u[1], u[1] * vel + p, vel * (u[2] + p)};
}

double Euler::max_speed(const State& u) const {
  const double p = pressure(u);
  if (!(u[0] > 0.0) || !(p > 0.0)) throw StateError("euler: invalid state " + describe(u, 3));
  return std::abs(u[1] / u[0]) + std::sqrt(gamma_ * p / u[0]);
}

Eigensystem Euler::eigensystem(const State& u) const {
  const double rho = u[0];
  const double p = pressure(u);
  if (!(rho > 0.0) || !(p > 0.0)) throw StateError("euler: invalid state " + describe(u, 3));
  const double v = u[1] / rho;
  const double c = std::sqrt(gamma_ * p / rho);
  const double H = (u[2] + p) / rho;
  const double b1 = (gamma_ - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * v * v;
  Eigensystem e;
  e.m = 3;
  e.lambda = {v - c, v, v + c};
  e.R = {1.0, 1.0, 1.0,
         v - c, v, v + c,
         H - v * c, 0.5 * v * v, H + v * c};
  e.L = {0.5 * (b2 + v / c), -0.5 * (b1 * v + 1.0 / c), 0.5 * b1,
         1.0 - b2, b1 * v, -b1,
         0.5 * (b2 - v / c), -0.5 * (b1 * v - 1.0 / c), 0.5 * b1};
  return e;
}

RadialEuler::RadialEuler(int n_dim, double gamma, bool enthalpy_energy_source)
    : Euler(gamma), n_(n_dim), enthalpy_(enthalpy_energy_source) {
  if (n_dim != 2 && n_dim != 3) throw std::invalid_argument("euler_radial: dimension must be 2 or 3");
}

State RadialEuler::source(const State& u, double x) const {
  if (x == 0.0) throw SingularPointError("euler_radial: source evaluated at r = 0");
  const double vel = u[1] / u[0];
  const double p = pressure(u);
  const double k = -(n_ - 1) / x;
  return {k * u[1], k * u[1] * vel, k * vel * (enthalpy_ ? u[2] + p : p)};
}

Topography Topography::flat() {
  return analytic([](double) { return 0.0; }, [](double) { return 0.0; });
}

Topography Topography::analytic(std::function<double(double)> z, std::function<double(double)> dz) {
  Topography t;
  t.z = std::move(z);
  t.dz = std::move(dz);
  return t;
}

Topography Topography::from_averages(std::vector<double> averages) {
  Topography t;
  t.cell_averages = std::move(averages);
  return t;
}

ShallowWater::ShallowWater(double g, Topography bottom) : g_(g), bottom_(std::move(bottom)) {
  if (!(g > 0.0)) throw std::invalid_argument("swe: gravity must be positive");
}

State ShallowWater::flux(const State& u) const {
  const double h = u[0];
  const double vel = h > 0.0 ? u[1] / h : 0.0;
  return {u[1], u[1] * vel + 0.5 * g_ * h * h, 0.0};
}

double ShallowWater::max_speed(const State& u) const {
  if (u[0] < 0.0) throw StateError("swe: negative depth " + describe(u, 2));
  const double vel = u[0] > 0.0 ? u[1] / u[0] : 0.0;
  return std::abs(vel) + std::sqrt(g_ * u[0]);
}

Eigensystem ShallowWater::eigensystem(const State& u) const {
  if (!(u[0] > 0.0)) throw StateError("swe: nonpositive depth " + describe(u, 2));
  const double v = u[1] / u[0];
  const double c = std::sqrt(g_ * u[0]);
  Eigensystem e;
  e.m = 2;
  e.lambda = {v - c, v + c, 0.0};
  e.R = {1.0, 1.0, v - c, v + c};
  e.L = {(v + c) / (2 * c), -1.0 / (2 * c), -(v - c) / (2 * c), 1.0 / (2 * c)};
  return e;
}

State ShallowWater::source(const State& u, double x) const {
  if (!bottom_.dz) throw std::logic_error("swe: pointwise source needs an analytic bottom");
  return {0.0, -g_ * u[0] * bottom_.dz(x), 0.0};
}

std::unique_ptr<Model> make_model(const std::string& name) {
  if (name == "advection") return std::make_unique<Advection>();
  if (name == "burgers") return std::make_unique<Burgers>();
  if (name == "euler") return std::make_unique<Euler>();
  if (name == "euler_radial2") return std::make_unique<RadialEuler>(2);
  if (name == "euler_radial3" || name == "euler_radial") return std::make_unique<RadialEuler>(3);
  if (name == "swe") return std::make_unique<ShallowWater>();
  throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace cweno
