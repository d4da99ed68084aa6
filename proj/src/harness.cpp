#include "cweno/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cweno {

namespace {

constexpr double kPi = std::numbers::pi;

CwenoConfig config_for(int order, double d0, const Options& opt) {
  if (order != 3 && order != 5 && order != 7 && order != 9) {
    throw std::invalid_argument("order must be 3, 5, 7 or 9");
  }
  if (d0 == 1.0) {
    // all weight on the central polynomial; linear_coefficients excludes this end point
    CwenoConfig cfg;
    cfg.g = (order - 1) / 2;
    cfg.d0 = 1.0;
    cfg.d.assign(static_cast<std::size_t>(cfg.g) + 2, 0.0);
    cfg.d[0] = 1.0;
    cfg.eps_hat = opt.eps_hat;
    cfg.eps_power = opt.eps_power;
    cfg.t = opt.t_exp;
    cfg.validate();
    return cfg;
  }
  return CwenoConfig::for_order(order, d0, opt.eps_hat, opt.eps_power, opt.t_exp);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double advect_low(double x) { return std::sin(kPi * x - std::sin(kPi * x) / kPi); }
double advect_high(double x) { return std::sin(kPi * x) + 0.25 * std::sin(15 * kPi * x) * std::exp(-20 * x * x); }

Field swe_field(std::shared_ptr<const Grid1D> grid, const std::function<double(double)>& h,
                const std::function<double(double)>& q) {
  return averages_of(std::move(grid), 2, [&](double x) { return State{h(x), q(x), 0.0}; });
}

}  // namespace

const std::vector<TestInfo>& test_catalog() {
  static const std::vector<TestInfo> catalog = {
      {"advect_low", "test 1: u_t + u_x = 0, u0 = sin(pi x - sin(pi x)/pi), periodic on [-1,1], T = 2"},
      {"advect_high", "test 2: u_t + u_x = 0, u0 = sin(pi x) + sin(15 pi x) exp(-20 x^2)/4, periodic on [-1,1], T = 2"},
      {"burgers", "test 3: Burgers, u0 = 0.2 - sin(pi x) + sin(2 pi x), periodic on [-1,1], snapshots 1/(2 pi), 0.6, 1"},
      {"lax", "test 4: Euler, Lax shock tube on [-5,5], T = 1.3"},
      {"swe_smooth", "test 5: shallow water, z = sin^2(pi x), h = 5 + exp(cos 2 pi x), q = sin(cos 2 pi x), periodic on [0,1], T = 0.1"},
      {"roughbottom", "test 6a: shallow water lake at rest h + z = 1.5 over random bottom averages on [0,1], T = 0.1"},
      {"dambreak", "test 6b: shallow water dam break H = 1.5 | 0.5 over the hump z = 0.3 exp(-10 x^2) on [-2,2], T = 0.2"},
      {"radial_sod", "test 7: spherical Euler explosion, Sod data split at r = 0.5, on [-1,1], T = 0.25"},
  };
  return catalog;
}

std::shared_ptr<const Grid1D> make_grid(const std::string& spec, double a, double b, int n, Boundary bc,
                                        std::uint64_t seed) {
  if (spec == "uniform") return std::make_shared<const Grid1D>(make_uniform(a, b, n, bc));
  if (spec.rfind("random:", 0) == 0) {
    double ratio = 0.0;
    try {
      ratio = std::stod(spec.substr(7));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad grid ratio in '" + spec + "'");
    }
    return std::make_shared<const Grid1D>(make_random_nonuniform(a, b, n, seed, ratio, bc));
  }
  throw std::invalid_argument("grid must be 'uniform' or 'random:<ratio>'");
}

Problem make_problem(const std::string& id, const Options& opt) {
  Problem p;
  p.id = id;
  auto grid_for = [&](double a, double b, int n_default, Boundary bc) {
    return make_grid(opt.grid, a, b, opt.N > 0 ? opt.N : n_default, bc, opt.seed);
  };
  if (id == "advect_low" || id == "advect_high") {
    p.model = std::make_shared<Advection>(1.0);
    p.grid = grid_for(-1.0, 1.0, 80, Boundary::periodic);
    const auto f = id == "advect_low" ? advect_low : advect_high;
    p.initial = averages_of(p.grid, 1, [f](double x) { return State{f(x), 0.0, 0.0}; });
    p.t_end = 2.0;
  } else if (id == "burgers") {
    p.model = std::make_shared<Burgers>();
    p.grid = grid_for(-1.0, 1.0, 160, Boundary::periodic);
    p.initial = averages_of(p.grid, 1, [](double x) {
      return State{0.2 - std::sin(kPi * x) + std::sin(2 * kPi * x), 0.0, 0.0};
    });
    p.t_end = 1.0;
  } else if (id == "lax") {
    auto euler = std::make_shared<Euler>(1.4);
    p.model = euler;
    p.grid = grid_for(-5.0, 5.0, 200, Boundary::outflow);
    const State left = euler->conserved(0.445, 0.6989, 3.5277);
    const State right = euler->conserved(0.5, 0.0, 0.571);
    p.initial = averages_of(p.grid, 3, [=](double x) { return x < 0.0 ? left : right; });
    p.t_end = 1.3;
    p.char_proj = true;
  } else if (id == "radial_sod") {
    auto euler = std::make_shared<RadialEuler>(3, 1.4);
    p.model = euler;
    p.grid = grid_for(-1.0, 1.0, 400, Boundary::outflow);
    const State inner = euler->conserved(1.0, 0.0, 1.0);
    const State outer = euler->conserved(0.125, 0.0, 0.1);
    p.initial = averages_of(p.grid, 3, [=](double x) { return std::abs(x) < 0.5 ? inner : outer; });
    p.t_end = 0.25;
    p.char_proj = true;
  } else if (id == "swe_smooth") {
    auto bottom = Topography::analytic([](double x) { return std::sin(kPi * x) * std::sin(kPi * x); },
                                       [](double x) { return kPi * std::sin(2 * kPi * x); });
    // unit gravity and depth-only errors reproduce the published error table
    p.model = std::make_shared<ShallowWater>(opt.gravity.value_or(1.0), bottom);
    p.grid = grid_for(0.0, 1.0, 64, Boundary::periodic);
    p.error_components = {0};
    p.initial = swe_field(p.grid, [](double x) { return 5.0 + std::exp(std::cos(2 * kPi * x)); },
                          [](double x) { return std::sin(std::cos(2 * kPi * x)); });
    p.t_end = 0.1;
    p.well_balanced = true;
  } else if (id == "dambreak") {
    auto z = [](double x) { return 0.3 * std::exp(-10 * x * x); };
    auto bottom = Topography::analytic(z, [](double x) { return -6.0 * x * std::exp(-10 * x * x); });
    p.model = std::make_shared<ShallowWater>(opt.gravity.value_or(9.81), bottom);
    p.grid = grid_for(-2.0, 2.0, 200, Boundary::outflow);
    p.initial = swe_field(p.grid, [z](double x) { return (x < 0.0 ? 1.5 : 0.5) - z(x); }, [](double) { return 0.0; });
    p.t_end = 0.2;
    p.well_balanced = true;
    p.char_proj = true;
  } else if (id == "roughbottom" || id == "wellbalance") {
    p.id = "roughbottom";
    // closed basin; zero-gradient ghosts next to a bottom step excite a growing boundary mode
    p.grid = grid_for(0.0, 1.0, 100, Boundary::reflective);
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<double> zbar(static_cast<std::size_t>(p.grid->cells()));
    for (auto& z : zbar) z = U(rng);
    p.initial = Field(p.grid, 2);
    for (int j = 0; j < p.grid->cells(); ++j) p.initial.at(j, 0) = 1.5 - zbar[static_cast<std::size_t>(j)];
    p.model = std::make_shared<ShallowWater>(opt.gravity.value_or(9.81), Topography::from_averages(std::move(zbar)));
    p.t_end = 0.1;
    p.well_balanced = true;
  } else {
    throw std::invalid_argument("unknown test '" + id + "'");
  }
  if (opt.model && *opt.model != p.model->name()) {
    std::shared_ptr<const Model> m = make_model(*opt.model);
    if (m->components() != p.model->components() || dynamic_cast<const ShallowWater*>(m.get()) ||
        dynamic_cast<const ShallowWater*>(p.model.get())) {
      throw std::invalid_argument("model '" + *opt.model + "' does not fit test '" + p.id + "'");
    }
    p.model = std::move(m);
  }
  if (opt.t_end) p.t_end = *opt.t_end;
  if (opt.char_proj) p.char_proj = *opt.char_proj;
  if (opt.well_balanced) p.well_balanced = *opt.well_balanced;
  if (opt.error_all_components) p.error_components.clear();
  p.metadata = options_metadata(opt);
  p.metadata["test"] = p.id;
  p.metadata["model"] = p.model->name();
  p.metadata["N"] = std::to_string(p.grid->cells());
  p.metadata["tend"] = fmt(p.t_end);
  p.metadata["char_proj"] = p.char_proj ? "on" : "off";
  p.metadata["wb"] = p.well_balanced ? "on" : "off";
  if (const auto* swe = dynamic_cast<const ShallowWater*>(p.model.get())) p.metadata["gravity"] = fmt(swe->gravity());
  if (!p.error_components.empty()) {
    std::string comps;
    for (int c : p.error_components) comps += (comps.empty() ? "comp" : "+comp") + std::to_string(c);
    p.metadata["error"] = comps;
  }
  if (p.id == "lax") p.metadata["tend_source"] = "conventional";
  return p;
}

RunConfig make_run_config(const Problem& problem, const Options& opt) {
  RunConfig cfg;
  cfg.cweno = config_for(opt.order, opt.d0, opt);
  cfg.recon = opt.recon;
  cfg.cfl = opt.cfl;
  cfg.t_end = problem.t_end;
  if (opt.tableau) cfg.tableau = tableau_by_name(*opt.tableau);
  cfg.dt_law = opt.dt_law;
  cfg.char_proj = problem.char_proj;
  if (opt.quad) cfg.quad = SourceQuadrature::parse(*opt.quad);
  cfg.well_balanced = problem.well_balanced;
  cfg.desing_eps = opt.desing_eps;
  cfg.validate();
  return cfg;
}

std::optional<Field> exact_solution(const Problem& problem, double t) {
  const auto* adv = dynamic_cast<const Advection*>(problem.model.get());
  if (!adv || problem.grid->boundary() != Boundary::periodic) return std::nullopt;
  const auto f = problem.id == "advect_low" ? advect_low : problem.id == "advect_high" ? advect_high : nullptr;
  if (!f) return std::nullopt;
  const double a = problem.grid->a();
  const double L = problem.grid->b() - a;
  const double shift = adv->speed() * t;
  return averages_of(problem.grid, 1, [=](double x) {
    double y = std::fmod(x - shift - a, L);
    if (y < 0) y += L;
    return State{f(a + y), 0.0, 0.0};
  });
}

Field restrict_to(const Field& fine, std::shared_ptr<const Grid1D> coarse) {
  const int nf = fine.cells();
  const int nc = coarse->cells();
  if (nc <= 0 || nf % nc != 0) throw std::invalid_argument("restrict_to: grids are not nested");
  const int k = nf / nc;
  const double tol = 1e-10 * (coarse->b() - coarse->a());
  Field out(coarse, fine.m);
  out.t = fine.t;
  for (int j = 0; j < nc; ++j) {
    if (std::abs(fine.grid->left(j * k) - coarse->left(j)) > tol ||
        std::abs(fine.grid->right(j * k + k - 1) - coarse->right(j)) > tol) {
      throw std::invalid_argument("restrict_to: cell edges do not match");
    }
    for (int c = 0; c < fine.m; ++c) {
      double s = 0.0;
      for (int i = j * k; i < j * k + k; ++i) s += fine.grid->size(i) * fine.at(i, c);
      out.at(j, c) = s / coarse->size(j);
    }
  }
  return out;
}

double error_1norm(const Field& field, const Field& reference, const std::vector<int>& components) {
  if (field.m != reference.m) throw std::invalid_argument("error_1norm: component counts differ");
  std::vector<int> comps = components;
  if (comps.empty()) {
    for (int c = 0; c < field.m; ++c) comps.push_back(c);
  }
  for (int c : comps) {
    if (c < 0 || c >= field.m) throw std::invalid_argument("error_1norm: no component " + std::to_string(c));
  }
  const Field ref = reference.cells() == field.cells() ? reference : restrict_to(reference, field.grid);
  const double tol = 1e-10 * (field.grid->b() - field.grid->a());
  double e = 0.0;
  for (int j = 0; j < field.cells(); ++j) {
    if (std::abs(ref.grid->left(j) - field.grid->left(j)) > tol) {
      throw std::invalid_argument("error_1norm: incompatible grids");
    }
    for (int c : comps) e += field.grid->size(j) * std::abs(field.at(j, c) - ref.at(j, c));
  }
  return e;
}

void fill_rates(std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == 0) {
      rows[i].rate = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    rows[i].rate = std::log(rows[i - 1].error / rows[i].error) /
                   std::log(static_cast<double>(rows[i].N) / rows[i - 1].N);
  }
}

std::vector<ConvergenceRow> run_convergence(const std::string& id, const std::vector<int>& Ns, const Options& opt) {
  std::vector<ConvergenceRow> rows;
  std::optional<Field> reference;
  for (int N : Ns) {
    Options o = opt;
    o.N = N;
    const Problem problem = make_problem(id, o);
    const RunConfig cfg = make_run_config(problem, o);
    const auto start = std::chrono::steady_clock::now();
    const Field result = run_to_time(problem.initial, *problem.model, cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::optional<Field> exact = exact_solution(problem, problem.t_end);
    if (!exact) {
      if (!reference) {
        Options r = opt;
        r.N = opt.reference_N;
        const Problem fine = make_problem(id, r);
        reference = run_to_time(fine.initial, *fine.model, make_run_config(fine, r));
      }
      exact = reference;
    }
    rows.push_back({N, error_1norm(result, *exact, problem.error_components), 0.0, seconds});
  }
  fill_rates(rows);
  return rows;
}

std::pair<double, double> poly_range(const Poly& p, double width) {
  const int samples = 201;
  const double half = 0.5 * width / p.scale();  // half width in the local coordinate
  const Poly d1 = p.derivative();
  const Poly d2 = d1.derivative();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::vector<double> v(samples);
  for (int k = 0; k < samples; ++k) {
    const double xi = -half + 2 * half * k / (samples - 1);
    v[static_cast<std::size_t>(k)] = p.local(xi);
    lo = std::min(lo, v[static_cast<std::size_t>(k)]);
    hi = std::max(hi, v[static_cast<std::size_t>(k)]);
  }
  // polish interior sample extrema with Newton steps on p' (derivatives are in x, so rescale)
  for (int k = 1; k + 1 < samples; ++k) {
    const double a = v[static_cast<std::size_t>(k - 1)], b = v[static_cast<std::size_t>(k)], c = v[static_cast<std::size_t>(k + 1)];
    if (!((b >= a && b >= c) || (b <= a && b <= c))) continue;
    double xi = -half + 2 * half * k / (samples - 1);
    for (int it = 0; it < 30; ++it) {
      const double f1 = d1.local(xi) * p.scale();
      const double f2 = d2.local(xi) * p.scale() * p.scale();
      if (f2 == 0.0) break;
      const double step = f1 / f2;
      xi = std::clamp(xi - step, -half, half);
      if (std::abs(step) < 1e-15 * std::max(1.0, half)) break;
    }
    const double val = p.local(xi);
    lo = std::min(lo, val);
    hi = std::max(hi, val);
  }
  return {lo, hi};
}

std::vector<ScanRow> run_disc_scan(int order, const std::vector<double>& d0s, const std::vector<double>& Ds,
                                   const Options& opt, double h) {
  std::vector<ScanRow> rows;
  const int g = (order - 1) / 2;
  const std::vector<double> sizes(static_cast<std::size_t>(2 * g + 1), h);
  for (double d0 : d0s) {
    const CwenoReconstructor rec(config_for(order, d0, opt));
    for (double D : Ds) {
      std::vector<double> u(static_cast<std::size_t>(2 * g + 1));
      for (int k = -g; k <= g; ++k) u[static_cast<std::size_t>(k + g)] = k < 0 ? 1.0 : k == 0 ? D : 0.0;
      const CwenoResult r = rec.reconstruct(u, StencilGeometry{sizes, -g, 0.0});
      const auto [lo, hi] = poly_range(r.rec, h);
      rows.push_back({d0, D, lo, hi});
    }
  }
  return rows;
}

std::vector<PropertyRRow> run_property_r(const std::vector<int>& orders, const std::vector<double>& d0s,
                                         const std::vector<double>& hs, const Options& opt) {
  std::vector<PropertyRRow> rows;
  for (int order : orders) {
    const int g = (order - 1) / 2;
    for (double d0 : d0s) {
      const CwenoReconstructor rec(config_for(order, d0, opt));
      for (double h : hs) {
        const std::vector<double> sizes(static_cast<std::size_t>(2 * g + 1), h);
        double ratio = std::numeric_limits<double>::infinity();
        // jump between offsets J-1 and J, for every position inside the stencil
        for (int J = -g + 1; J <= g; ++J) {
          std::vector<double> u(static_cast<std::size_t>(2 * g + 1));
          for (int k = -g; k <= g; ++k) u[static_cast<std::size_t>(k + g)] = k < J ? 1.0 : 0.0;
          const CwenoResult r = rec.reconstruct(u, StencilGeometry{sizes, -g, 0.0});
          ratio = std::min(ratio, r.indicators[0] / r.optimal_indicator);
        }
        rows.push_back({order, d0, h, ratio});
      }
    }
  }
  return rows;
}

WellBalanceRow run_wellbalance(int order, int N, const Options& opt) {
  Options o = opt;
  o.order = order;
  o.N = N;
  const Problem problem = make_problem("roughbottom", o);
  const RunConfig cfg = make_run_config(problem, o);
  RunStats stats;
  const Field result = run_to_time(problem.initial, *problem.model, cfg, {}, {}, &stats);
  const auto& swe = dynamic_cast<const ShallowWater&>(*problem.model);
  WellBalanceRow row{order, N, 0.0, 0.0, stats.wall_seconds};
  for (int j = 0; j < result.cells(); ++j) {
    row.max_q = std::max(row.max_q, std::abs(result.at(j, 1)));
    const double z = swe.bottom().cell_averages[static_cast<std::size_t>(j)];
    row.max_surface = std::max(row.max_surface, std::abs(result.at(j, 0) + z - 1.5));
  }
  return row;
}

NamedRun run_named_test(const std::string& id, const Options& opt, std::vector<double> snapshot_times) {
  NamedRun run{make_problem(id, opt), {}, {}};
  const RunConfig cfg = make_run_config(run.problem, opt);
  std::erase_if(snapshot_times, [&](double t) { return t > run.problem.t_end; });
  run_to_time(run.problem.initial, *run.problem.model, cfg, snapshot_times,
              [&](const Field& f) { run.snapshots.push_back(f); }, &run.stats);
  return run;
}

double total_variation(const Field& f, int component) {
  double tv = 0.0;
  const int n = f.cells();
  for (int j = 0; j + 1 < n; ++j) tv += std::abs(f.at(j + 1, component) - f.at(j, component));
  if (f.grid->boundary() == Boundary::periodic && n > 1) tv += std::abs(f.at(0, component) - f.at(n - 1, component));
  return tv;
}

std::string format_csv(const Table& table) {
  std::ostringstream os;
  os << "#";
  for (const auto& [k, v] : table.metadata) {
    std::string value = v;
    std::replace(value.begin(), value.end(), ' ', '_');
    os << ' ' << k << '=' << value;
  }
  os << '\n';
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (!std::isnan(row[i])) os << fmt(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

void write_csv(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << format_csv(table);
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string kv;
      while (ls >> kv) {
        const auto eq = kv.find('=');
        if (eq != std::string::npos) t.metadata[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (!have_header) {
      t.header = cells;
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) throw std::runtime_error("csv: row width differs from header");
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(c.empty() ? std::numeric_limits<double>::quiet_NaN() : std::stod(c));
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("csv: missing header");
  return t;
}

Table read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

Table convergence_table(const std::vector<ConvergenceRow>& rows, bool timing) {
  Table t;
  t.header = {"N", "error", "rate"};
  if (timing) t.header.push_back("seconds");
  for (const auto& r : rows) {
    t.rows.push_back({static_cast<double>(r.N), r.error, r.rate});
    if (timing) t.rows.back().push_back(r.seconds);
  }
  return t;
}

Table scan_table(const std::vector<ScanRow>& rows) {
  Table t;
  t.header = {"d0", "D", "min", "max"};
  for (const auto& r : rows) t.rows.push_back({r.d0, r.D, r.min, r.max});
  return t;
}

Table property_r_table(const std::vector<PropertyRRow>& rows) {
  Table t;
  t.header = {"order", "d0", "h", "ratio"};
  for (const auto& r : rows) t.rows.push_back({static_cast<double>(r.order), r.d0, r.h, r.ratio});
  return t;
}

Table solution_table(const Field& field) {
  Table t;
  t.header = {"x"};
  for (int c = 0; c < field.m; ++c) t.header.push_back("comp" + std::to_string(c));
  for (int j = 0; j < field.cells(); ++j) {
    std::vector<double> row = {field.grid->center(j)};
    for (int c = 0; c < field.m; ++c) row.push_back(field.at(j, c));
    t.rows.push_back(std::move(row));
  }
  t.metadata["t"] = fmt(field.t);
  return t;
}

Table wellbalance_table(const std::vector<WellBalanceRow>& rows, bool timing) {
  Table t;
  t.header = {"order", "N", "max_q", "max_surface"};
  if (timing) t.header.push_back("seconds");
  for (const auto& r : rows) {
    t.rows.push_back({static_cast<double>(r.order), static_cast<double>(r.N), r.max_q, r.max_surface});
    if (timing) t.rows.back().push_back(r.seconds);
  }
  return t;
}

std::map<std::string, std::string> options_metadata(const Options& opt) {
  std::map<std::string, std::string> m;
  m["order"] = std::to_string(opt.order);
  m["d0"] = fmt(opt.d0);
  m["eps"] = fmt(opt.eps_hat) + "*h^" + std::to_string(opt.eps_power);
  m["t_exp"] = std::to_string(opt.t_exp);
  m["cfl"] = fmt(opt.cfl);
  m["grid"] = opt.grid;
  m["seed"] = std::to_string(opt.seed);
  m["recon"] = opt.recon == Reconstruction::cweno ? "cweno" : "weno";
  m["dt_law"] = opt.dt_law == DtLaw::cfl ? "cfl" : "order_matched";
  m["integrator"] = opt.tableau ? *opt.tableau : default_tableau(opt.order).name;
  if (opt.quad) m["quad"] = *opt.quad;
  return m;
}

}  // namespace cweno
