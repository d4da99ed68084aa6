#pragma once

// Experiment drivers: problem setups, error norms, convergence studies,
// reconstruction scans and CSV output.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cweno/grid.hpp"
#include "cweno/models.hpp"
#include "cweno/solver.hpp"

namespace cweno {

struct Options {
  int order = 5;
  int N = 0;  // 0 selects the problem default
  double d0 = 0.75;
  double eps_hat = 1.0;
  int eps_power = 2;
  int t_exp = 2;
  double cfl = 0.45;
  std::optional<bool> char_proj;
  std::optional<bool> well_balanced;
  std::optional<double> t_end;
  std::uint64_t seed = 20170101;
  std::string grid = "uniform";  // or random:<ratio>
  std::optional<std::string> quad;
  std::optional<std::string> tableau;  // ssprk3, rk4, rk5, dp8, extrap:<q> or a file
  Reconstruction recon = Reconstruction::cweno;
  DtLaw dt_law = DtLaw::cfl;
  int reference_N = 2048;  // fine grid for self-referenced convergence
  double desing_eps = 0.0;
  std::optional<double> gravity;  // 1 for swe_smooth, 9.81 otherwise
  std::optional<std::string> model;  // replaces the problem's model when the state layout matches
  bool error_all_components = false;  // override a problem's error components
};

struct TestInfo {
  std::string id;
  std::string description;
};

/// Every runnable problem id with a one-line description.
const std::vector<TestInfo>& test_catalog();

/// A fully specified initial-boundary value problem.
struct Problem {
  std::string id;
  std::shared_ptr<const Model> model;
  std::shared_ptr<const Grid1D> grid;
  Field initial;
  double t_end = 0.0;
  bool char_proj = false;
  bool well_balanced = false;
  std::vector<int> error_components;  // empty: all
  std::map<std::string, std::string> metadata;
};

std::shared_ptr<const Grid1D> make_grid(const std::string& spec, double a, double b, int n, Boundary bc,
                                        std::uint64_t seed);

Problem make_problem(const std::string& id, const Options& opt);
RunConfig make_run_config(const Problem& problem, const Options& opt);

/// Exact cell averages at time t where an analytic solution exists (advection).
std::optional<Field> exact_solution(const Problem& problem, double t);

/// sum_j h_j |u_j - ref_j| over the given components (all when empty). The
/// reference may live on a grid whose cells nest inside the coarse ones; it is
/// averaged exactly.
double error_1norm(const Field& field, const Field& reference, const std::vector<int>& components = {});

/// Coarse-grid averages of a field given on a nested fine grid.
Field restrict_to(const Field& fine, std::shared_ptr<const Grid1D> coarse);

struct ConvergenceRow {
  int N = 0;
  double error = 0.0;
  double rate = 0.0;  // NaN in the first row
  double seconds = 0.0;
};

/// log2 rates between successive rows, assuming N doubles (general ratios allowed).
void fill_rates(std::vector<ConvergenceRow>& rows);

std::vector<ConvergenceRow> run_convergence(const std::string& id, const std::vector<int>& Ns, const Options& opt);

struct ScanRow {
  double d0 = 0.0;
  double D = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Extremes of a polynomial over its cell [center - w/2, center + w/2]: dense
/// sampling refined by Newton steps on the derivative.
std::pair<double, double> poly_range(const Poly& p, double width);

/// Central-jump scan: data (..., 1, 1, D, 0, 0, ...) on a uniform stencil of width h.
std::vector<ScanRow> run_disc_scan(int order, const std::vector<double>& d0s, const std::vector<double>& Ds,
                                   const Options& opt, double h = 0.01);

struct PropertyRRow {
  int order = 0;
  double d0 = 0.0;
  double h = 0.0;
  double ratio = 0.0;  // min over jump positions of I[P_0] / I[P_opt]
};

std::vector<PropertyRRow> run_property_r(const std::vector<int>& orders, const std::vector<double>& d0s,
                                         const std::vector<double>& hs, const Options& opt);

struct WellBalanceRow {
  int order = 0;
  int N = 0;
  double max_q = 0.0;
  double max_surface = 0.0;  // max |h + z - 1.5|
  double seconds = 0.0;
};

/// Rough-bottom lake at rest run to t_end.
WellBalanceRow run_wellbalance(int order, int N, const Options& opt);

struct NamedRun {
  Problem problem;
  std::vector<Field> snapshots;
  RunStats stats;
};

/// Runs a problem to its final time, keeping the requested intermediate snapshots.
NamedRun run_named_test(const std::string& id, const Options& opt, std::vector<double> snapshot_times = {});

/// Total variation sum_j |u_{j+1} - u_j| of one component.
double total_variation(const Field& f, int component = 0);

// CSV: one "# key=value ..." metadata line, a header row, 17 significant digits.
struct Table {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(const std::string& path, const Table& table);
std::string format_csv(const Table& table);
Table read_csv(const std::string& path);
Table parse_csv(const std::string& text);

/// The wall-clock column is only written with `timing`, so default output is reproducible.
Table convergence_table(const std::vector<ConvergenceRow>& rows, bool timing = false);
Table scan_table(const std::vector<ScanRow>& rows);
Table property_r_table(const std::vector<PropertyRRow>& rows);
Table solution_table(const Field& field);
Table wellbalance_table(const std::vector<WellBalanceRow>& rows, bool timing = false);

std::map<std::string, std::string> options_metadata(const Options& opt);

}  // namespace cweno
