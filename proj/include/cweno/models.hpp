#pragma once

// Hyperbolic systems used by the solver: flux, wave speeds, eigenvectors of
// the flux Jacobian and (optional) source terms. At most three components.

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cweno {

inline constexpr int kMaxComponents = 3;
using State = std::array<double, kMaxComponents>;

/// Non-physical state (negative density, pressure or depth).
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Source evaluated at a singular coordinate (the origin for radial flows).
class SingularPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Right/left eigenvectors (row-major m x m) and eigenvalues of the flux Jacobian.
struct Eigensystem {
  int m = 1;
  std::array<double, kMaxComponents * kMaxComponents> R{};
  std::array<double, kMaxComponents * kMaxComponents> L{};
  State lambda{};

  double r(int i, int j) const { return R[static_cast<std::size_t>(i * m + j)]; }
  double l(int i, int j) const { return L[static_cast<std::size_t>(i * m + j)]; }
  State to_characteristic(const State& u) const;
  State from_characteristic(const State& w) const;
};

class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual int components() const = 0;
  virtual State flux(const State& u) const = 0;
  virtual double max_speed(const State& u) const = 0;
  /// Identity for scalar models.
  virtual Eigensystem eigensystem(const State& u) const;

  virtual bool has_source() const { return false; }
  virtual State source(const State& u, double x) const;

  /// Components that change sign under x -> -x (momenta).
  virtual std::vector<bool> odd_components() const { return std::vector<bool>(static_cast<std::size_t>(components()), false); }
};

class Advection final : public Model {
 public:
  explicit Advection(double speed = 1.0) : a_(speed) {}
  std::string name() const override { return "advection"; }
  int components() const override { return 1; }
  State flux(const State& u) const override { return {a_ * u[0], 0.0, 0.0}; }
  double max_speed(const State&) const override { return std::abs(a_); }
  double speed() const { return a_; }

 private:
  double a_;
};

class Burgers final : public Model {
 public:
  std::string name() const override { return "burgers"; }
  int components() const override { return 1; }
  State flux(const State& u) const override { return {0.5 * u[0] * u[0], 0.0, 0.0}; }
  double max_speed(const State& u) const override { return std::abs(u[0]); }
};

/// Ideal-gas Euler equations in (rho, rho u, E).
class Euler : public Model {
 public:
  explicit Euler(double gamma = 1.4);
  std::string name() const override { return "euler"; }
  int components() const override { return 3; }
  State flux(const State& u) const override;
  double max_speed(const State& u) const override;
  Eigensystem eigensystem(const State& u) const override;
  std::vector<bool> odd_components() const override { return {false, true, false}; }

  double gamma() const { return gamma_; }
  double pressure(const State& u) const;
  State conserved(double rho, double vel, double p) const;

 private:
  double gamma_;
};

/// Radially symmetric Euler flow in n space dimensions, written along a signed
/// coordinate x (r = |x|). With `enthalpy_energy_source` the energy source uses
/// u (E + p) instead of u p.
class RadialEuler final : public Euler {
 public:
  RadialEuler(int n_dim, double gamma = 1.4, bool enthalpy_energy_source = false);
  std::string name() const override { return "euler_radial" + std::to_string(n_); }
  bool has_source() const override { return true; }
  State source(const State& u, double x) const override;
  int dimensions() const { return n_; }

 private:
  int n_;
  bool enthalpy_;
};

/// Bottom elevation z(x). Analytic profiles give point values and slopes;
/// rough bottoms only carry per-cell averages.
struct Topography {
  std::function<double(double)> z;
  std::function<double(double)> dz;
  std::vector<double> cell_averages;

  static Topography flat();
  static Topography analytic(std::function<double(double)> z, std::function<double(double)> dz);
  static Topography from_averages(std::vector<double> averages);
  bool is_analytic() const { return static_cast<bool>(z); }
};

/// Shallow water in (h, q) with momentum source -g h z_x.
class ShallowWater final : public Model {
 public:
  explicit ShallowWater(double g = 9.81, Topography bottom = Topography::flat());
  std::string name() const override { return "swe"; }
  int components() const override { return 2; }
  State flux(const State& u) const override;
  double max_speed(const State& u) const override;
  Eigensystem eigensystem(const State& u) const override;
  bool has_source() const override { return true; }
  State source(const State& u, double x) const override;
  std::vector<bool> odd_components() const override { return {false, true}; }

  double gravity() const { return g_; }
  const Topography& bottom() const { return bottom_; }

 private:
  double g_;
  Topography bottom_;
};

/// Builds a model by name: advection, burgers, euler, euler_radial2, euler_radial3, swe.
std::unique_ptr<Model> make_model(const std::string& name);

}  // namespace cweno
