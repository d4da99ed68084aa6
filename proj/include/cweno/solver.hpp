#pragma once

// Method-of-lines finite volume solver: one CWENO polynomial per cell and
// stage, local Lax-Friedrichs fluxes at the interfaces, cell averages of the
// source from the same polynomial, explicit Runge-Kutta in time.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cweno/grid.hpp"
#include "cweno/models.hpp"
#include "cweno/poly.hpp"
#include "cweno/quadrature.hpp"
#include "cweno/reconstruction.hpp"
#include "cweno/time_integration.hpp"

namespace cweno {

/// NaN or infinity produced during time stepping.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Reconstruction { cweno, weno };
enum class DtLaw { cfl, order_matched };

struct SourceQuadrature {
  enum class Kind { gauss, richardson };
  Kind kind = Kind::gauss;
  int n = 0;  // Gauss points, or Richardson order 4/6/8/10

  /// "gauss:<n>" or "richardson:<q>".
  static SourceQuadrature parse(const std::string& text);
  std::string str() const;
};

struct RunConfig {
  CwenoConfig cweno = CwenoConfig::for_order(5);
  Reconstruction recon = Reconstruction::cweno;
  double cfl = 0.45;
  double t_end = 0.0;
  std::optional<ButcherTableau> tableau;  // default_tableau(order) when empty
  DtLaw dt_law = DtLaw::cfl;
  bool char_proj = false;
  std::optional<SourceQuadrature> quad;  // Gauss with g+1 points, or Richardson of order+1 when well balanced
  bool well_balanced = false;
  double desing_eps = 0.0;  // <= 0 means the local cell size

  void validate() const;
  ButcherTableau integrator() const { return tableau ? *tableau : default_tableau(cweno.order()); }
  SourceQuadrature source_quadrature() const;
};

/// Cell averages, stored cell-major: u[j * m + c].
struct Field {
  std::shared_ptr<const Grid1D> grid;
  int m = 1;
  std::vector<double> u;
  double t = 0.0;

  Field() = default;
  Field(std::shared_ptr<const Grid1D> g, int components);

  int cells() const { return grid->cells(); }
  double& at(int j, int c) { return u[static_cast<std::size_t>(j * m + c)]; }
  double at(int j, int c) const { return u[static_cast<std::size_t>(j * m + c)]; }
  State state(int j) const;
  void set_state(int j, const State& s);
  /// Sum of h_j u_j per component.
  State total() const;
};

/// Fills a field with 10-point Gauss cell averages of the state function.
Field averages_of(std::shared_ptr<const Grid1D> grid, int m, const std::function<State(double)>& f);

/// 1/2 (f(uL) + f(uR)) - a/2 (uR - uL), a the larger of the two wave speeds.
State llf_flux(const State& uL, const State& uR, const Model& model);

/// Desingularized velocity 2 h q / (h^2 + max(h^2, eps^2)); equals q/h when h >= eps.
double desingularized_velocity(double h, double q, double eps);

/// Richardson weights for S_1, S_2, S_4, ... giving order 4, 6, 8 or 10.
std::vector<double> richardson_weights(int order);

/// Combination of composite trapezoid values S_n, n = 1, 2, 4, ...
double richardson_combine(std::span<const double> trapezoid, int order);

/// Mean of the model source over [left, right] by the n-point Gauss rule,
/// evaluated on the reconstructed state.
State source_quadrature_gauss(const std::function<State(double)>& state_at, double left, double right,
                              const Model& model, int n);

/// Integral over a cell of -g h z_x, from the surface H = h + z and the bottom z
/// at 2^k + 1 equispaced nodes (both ends included), as the Richardson
/// combination of the trapezoid-type sums sum -g (h_k + h_{k+1})/2 (z_{k+1} - z_k),
/// where z is clipped at the surface so that h = max(0, H - z).
double hydrostatic_source(std::span<const double> surface, std::span<const double> bottom, double g,
                          int order);

/// Spatial discretization on a fixed grid.
class SpatialOperator {
 public:
  SpatialOperator(const Model& model, std::shared_ptr<const Grid1D> grid, const RunConfig& cfg);

  int components() const { return m_; }
  const Grid1D& grid() const { return *grid_; }

  /// Semidiscrete right-hand side d/dt of the cell averages.
  void rhs(std::span<const double> u, std::span<double> dudt) const;

  /// Polynomials of the conserved variables (the water surface for the
  /// well-balanced shallow water path) in interior cells; polys[j * m + c].
  std::vector<Poly> reconstruct(std::span<const double> u) const;

  double max_speed(std::span<const double> u) const;
  /// Time step from the CFL law (and the order-matching cap when requested).
  double stable_dt(std::span<const double> u, int time_order) const;

 private:
  struct CellGeometry {
    double center = 0.0;
    double width = 0.0;
    double scale = 1.0;
    int gammas = -1;  // index into gammas_, -1 for the uniform tables
    std::array<double, kMaxCoeffs> sizes{};
  };

  void pad(std::span<const double> u, std::vector<double>& padded) const;
  void reconstruct_cell(int i, std::span<const double> padded, Poly* out) const;
  void weno_cell(int i, std::span<const double> padded, double* left, double* right) const;
  double desing_eps(int j) const;

  const Model& model_;
  std::shared_ptr<const Grid1D> grid_;
  RunConfig cfg_;
  CwenoReconstructor rec_;
  const ShallowWater* swe_ = nullptr;
  int m_;
  int g_;
  int width_;  // ghost layers
  bool uniform_;
  std::vector<bool> odd_;
  std::vector<CellGeometry> geo_;  // cells -1 .. N
  std::vector<StencilGammas> gammas_;
  SourceQuadrature quad_;
  std::vector<double> points_;  // reference positions in [-1/2, 1/2]: both edges, then source nodes
  QuadratureRule gauss_;
  // well-balanced path: padded bottom averages and bottom values at points_ for cells -1 .. N
  std::vector<double> bottom_pad_;
  std::vector<double> bottom_at_;
};

struct RunStats {
  long steps = 0;
  long rhs_evaluations = 0;
  double wall_seconds = 0.0;
};

/// One explicit Runge-Kutta step; throws NumericalError naming the stage and cell
/// when a NaN or infinity appears.
void rk_step(const SpatialOperator& op, const ButcherTableau& tableau, Field& field, double dt);

/// Advances to cfg.t_end, calling `on_snapshot` at each requested time (and at the end).
Field run_to_time(Field field, const Model& model, const RunConfig& cfg,
                  std::vector<double> snapshot_times = {},
                  const std::function<void(const Field&)>& on_snapshot = {}, RunStats* stats = nullptr);

/// Convenience wrapper building a SpatialOperator for one evaluation.
std::vector<double> semidiscrete_rhs(const Field& field, const Model& model, const RunConfig& cfg);

/// Worker threads for the per-cell loops; a no-op without OpenMP.
void set_thread_count(int n);

}  // namespace cweno
