// Command-line front end for the experiment drivers.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cweno/harness.hpp"

using namespace cweno;

namespace {

struct Args {
  std::vector<int> order{5};
  std::vector<int> N;
  std::vector<double> d0;
  std::vector<double> D;
  std::vector<double> h;
  std::vector<double> snapshots;
  double eps_hat = 1.0;
  int eps_power = 2;
  int t_exp = 2;
  double cfl = 0.45;
  std::string char_proj;
  std::string wb;
  std::string model;
  std::string test = "advect_low";
  double tend = -1.0;
  std::uint64_t seed = 20170101;
  std::string grid = "uniform";
  std::string quad;
  std::string tableau;
  std::string recon = "cweno";
  std::string dt_law = "cfl";
  std::string out;
  int ref_N = 2048;
  int threads = 0;
  double gravity = -1.0;
  double desing_eps = 0.0;
  bool timing = false;
  bool error_all = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string test_list() {
  std::ostringstream os;
  os << "Tests:\n";
  for (const auto& t : test_catalog()) os << "  " << t.id << std::string(14 - t.id.size(), ' ') << t.description << '\n';
  os << "  wellbalance   alias of roughbottom\n";
  return os.str();
}

void add_scheme_options(CLI::App* app, Args& a) {
  app->add_option("--eps-hat", a.eps_hat, "epsilon = eps_hat * h^p")->check(CLI::NonNegativeNumber);
  app->add_option("--eps-power", a.eps_power, "p in epsilon = eps_hat * h^p")->check(CLI::IsMember({0, 1, 2}));
  app->add_option("--t-exp", a.t_exp, "exponent t of the nonlinear weights")->check(CLI::Range(2, 16));
  app->add_option("--seed", a.seed, "seed for random grids and rough bottoms");
}

void add_run_options(CLI::App* app, Args& a) {
  add_scheme_options(app, a);
  app->add_option("--cfl", a.cfl, "CFL number")->check(CLI::PositiveNumber);
  app->add_option("--char-proj", a.char_proj, "characteristic projection (default per test)")->check(CLI::IsMember({"on", "off"}));
  app->add_option("--wb", a.wb, "well-balanced shallow water scheme (default per test)")->check(CLI::IsMember({"on", "off"}));
  app->add_option("--model", a.model, "replace the test's model (advection, burgers, euler, euler_radial2, euler_radial3)");
  app->add_option("--test", a.test, "test id, see below");
  app->add_option("--tend", a.tend, "final time (default per test)")->check(CLI::PositiveNumber);
  app->add_option("--grid", a.grid, "uniform or random:<max size ratio>");
  app->add_option("--quad", a.quad, "source quadrature gauss:<n> or richardson:<4|6|8|10>");
  app->add_option("--tableau", a.tableau, "ssprk3, rk4, rk5, dp8, extrap:<q> or a Butcher tableau file");
  app->add_option("--recon", a.recon, "reconstruction")->check(CLI::IsMember({"cweno", "weno"}));
  app->add_option("--dt-law", a.dt_law, "time step law")->check(CLI::IsMember({"cfl", "order-matched"}));
  app->add_option("--threads", a.threads, "worker threads (default: hardware count)")->check(CLI::PositiveNumber);
  app->add_option("--gravity", a.gravity, "gravity for shallow water tests")->check(CLI::PositiveNumber);
  app->add_option("--desing-eps", a.desing_eps, "desingularization depth (default: cell size)")->check(CLI::NonNegativeNumber);
}

Options to_options(const Args& a) {
  Options o;
  o.order = a.order.front();
  o.N = a.N.empty() ? 0 : a.N.front();
  o.d0 = a.d0.empty() ? 0.75 : a.d0.front();
  o.eps_hat = a.eps_hat;
  o.eps_power = a.eps_power;
  o.t_exp = a.t_exp;
  o.cfl = a.cfl;
  if (!a.char_proj.empty()) o.char_proj = a.char_proj == "on";
  if (!a.wb.empty()) o.well_balanced = a.wb == "on";
  if (!a.model.empty()) o.model = a.model;
  if (a.tend > 0) o.t_end = a.tend;
  o.seed = a.seed;
  o.grid = a.grid;
  if (!a.quad.empty()) o.quad = a.quad;
  if (!a.tableau.empty()) o.tableau = a.tableau;
  o.recon = a.recon == "weno" ? Reconstruction::weno : Reconstruction::cweno;
  o.dt_law = a.dt_law == "cfl" ? DtLaw::cfl : DtLaw::order_matched;
  o.reference_N = a.ref_N;
  o.desing_eps = a.desing_eps;
  if (a.gravity > 0) o.gravity = a.gravity;
  o.error_all_components = a.error_all;
  return o;
}

void emit(const Table& table, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << format_csv(table);
  } else {
    write_csv(path, table);
  }
}

std::vector<int> default_Ns(const std::string& test) {
  if (test == "swe_smooth") return {16, 32, 64, 128, 256};
  return {40, 80, 160, 320, 640};
}

// "--key value" pairs from a key=value file, skipping keys already given on the command line.
std::vector<std::string> config_args(const std::string& path, const std::vector<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    const std::string flag = "--" + key;
    bool present = false;
    for (const auto& g : given) present = present || g == flag || g.rfind(flag + "=", 0) == 0;
    if (present) continue;
    const bool is_flag = key == "timing" || key == "error-all";
    if (is_flag) {
      if (value == "true" || value == "on" || value.empty()) args.push_back(flag);
    } else {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

int run(int argc, char** argv) {
  // pull --config out first; its entries act as defaults for the flags
  std::vector<std::string> given;
  std::string config;
  for (int i = 1; i < argc; ++i) {
    const std::string s = argv[i];
    if (s == "--config") {
      if (i + 1 >= argc) throw UsageError("--config needs a path");
      config = argv[++i];
    } else if (s.rfind("--config=", 0) == 0) {
      config = s.substr(9);
    } else {
      given.push_back(s);
    }
  }
  if (!config.empty()) {
    std::vector<std::string> extra = config_args(config, given);
    // insert after the subcommand name so the flags bind to it
    const auto at = given.empty() || given.front().rfind("-", 0) == 0 ? given.begin() : given.begin() + 1;
    given.insert(at, extra.begin(), extra.end());
  }

  Args a;
  CLI::App app{"High-order central WENO finite volume experiments"};
  app.footer(test_list() + "\nAll subcommands accept --config <file> with key=value lines; explicit flags win.");
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  auto* conv = app.add_subcommand("convergence", "1-norm errors and rates over a list of grids");
  add_run_options(conv, a);
  conv->add_option("--order", a.order, "scheme order")->check(CLI::IsMember({3, 5, 7, 9}))->expected(1);
  conv->add_option("--N", a.N, "cell counts, comma separated")->delimiter(',')->check(CLI::PositiveNumber);
  conv->add_option("--d0", a.d0, "central linear coefficient")->expected(1);
  conv->add_option("--ref-N", a.ref_N, "cells of the self-computed reference")->check(CLI::PositiveNumber);
  conv->add_flag("--timing", a.timing, "add a wall-clock seconds column");
  conv->add_flag("--error-all", a.error_all, "sum the error over every component");
  conv->add_option("--out", a.out, "CSV path (default stdout)");

  auto* solve = app.add_subcommand("solve", "run one test and write cell averages");
  add_run_options(solve, a);
  solve->add_option("--order", a.order, "scheme order")->check(CLI::IsMember({3, 5, 7, 9}))->expected(1);
  solve->add_option("--N", a.N, "cells")->check(CLI::PositiveNumber)->expected(1);
  solve->add_option("--d0", a.d0, "central linear coefficient")->expected(1);
  solve->add_option("--snapshots", a.snapshots, "extra output times, comma separated")->delimiter(',');
  solve->add_option("--out", a.out, "CSV path; with several snapshots <stem>_<k>.csv");

  auto* wb = app.add_subcommand("wellbalance", "lake at rest over a random bottom");
  add_run_options(wb, a);
  wb->add_option("--order", a.order, "scheme orders, comma separated (default 3,5,7,9)")->delimiter(',')->check(CLI::IsMember({3, 5, 7, 9}));
  wb->add_option("--N", a.N, "cell counts, comma separated")->delimiter(',')->check(CLI::PositiveNumber);
  wb->add_option("--d0", a.d0, "central linear coefficient")->expected(1);
  wb->add_flag("--timing", a.timing, "add a wall-clock seconds column");
  wb->add_option("--out", a.out, "CSV path (default stdout)");

  auto* scan = app.add_subcommand("discscan", "min and max of the reconstruction across a jump in the central cell");
  add_scheme_options(scan, a);
  scan->add_option("--order", a.order, "scheme order")->check(CLI::IsMember({3, 5, 7, 9}))->expected(1);
  scan->add_option("--d0", a.d0, "central linear coefficients, comma separated")->delimiter(',');
  scan->add_option("--D", a.D, "central cell values, comma separated (default 0.01..0.99)")->delimiter(',');
  scan->add_option("--h", a.h, "cell size (default 0.01)")->expected(1)->check(CLI::PositiveNumber);
  scan->add_option("--out", a.out, "CSV path (default stdout)");

  auto* pr = app.add_subcommand("property-r", "indicator ratio I[P_0]/I[P_opt] on step data");
  add_scheme_options(pr, a);
  pr->add_option("--order", a.order, "scheme orders, comma separated (default 3,5,7,9)")->delimiter(',')->check(CLI::IsMember({3, 5, 7, 9}));
  pr->add_option("--d0", a.d0, "central linear coefficients, comma separated")->delimiter(',');
  pr->add_option("--h", a.h, "cell sizes, comma separated (default 2^-3..2^-10)")->delimiter(',')->check(CLI::PositiveNumber);
  pr->add_option("--out", a.out, "CSV path (default stdout)");

  std::vector<std::string> rev(given.rbegin(), given.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  set_thread_count(a.threads > 0 ? a.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  if ((wb->parsed() && wb->count("--order") == 0) || (pr->parsed() && pr->count("--order") == 0)) {
    a.order = {3, 5, 7, 9};
  }
  Options opt = to_options(a);

  if (conv->parsed()) {
    const std::vector<int> Ns = a.N.empty() ? default_Ns(a.test) : a.N;
    Table t = convergence_table(run_convergence(a.test, Ns, opt), a.timing);
    Options meta = opt;
    meta.N = Ns.front();
    t.metadata = make_problem(a.test, meta).metadata;
    t.metadata.erase("N");
    if (!exact_solution(make_problem(a.test, meta), 0.0)) t.metadata["reference_N"] = std::to_string(a.ref_N);
    emit(t, a.out);
  } else if (solve->parsed()) {
    const NamedRun r = run_named_test(a.test, opt, a.snapshots);
    for (std::size_t k = 0; k < r.snapshots.size(); ++k) {
      Table t = solution_table(r.snapshots[k]);
      for (const auto& [key, value] : r.problem.metadata) t.metadata[key] = value;
      t.metadata["t"] = solution_table(r.snapshots[k]).metadata.at("t");
      std::string path = a.out;
      if (!path.empty() && path != "-" && r.snapshots.size() > 1) {
        const auto dot = path.rfind('.');
        const std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
        const std::string ext = dot == std::string::npos ? ".csv" : path.substr(dot);
        path = stem + "_" + std::to_string(k) + ext;
      }
      emit(t, path);
    }
  } else if (wb->parsed()) {
    const std::vector<int> Ns = a.N.empty() ? std::vector<int>{100, 200, 400} : a.N;
    std::vector<WellBalanceRow> rows;
    for (int order : a.order) {
      for (int N : Ns) rows.push_back(run_wellbalance(order, N, opt));
    }
    Table t = wellbalance_table(rows, a.timing);
    t.metadata = options_metadata(opt);
    t.metadata.erase("order");
    if (!opt.tableau) t.metadata.erase("integrator");
    t.metadata["test"] = "roughbottom";
    t.metadata["tend"] = a.tend > 0 ? std::to_string(a.tend) : "0.1";
    emit(t, a.out);
  } else if (scan->parsed()) {
    std::vector<double> Ds = a.D;
    if (Ds.empty()) {
      for (int i = 1; i <= 99; ++i) Ds.push_back(i / 100.0);
    }
    const std::vector<double> d0s = a.d0.empty() ? std::vector<double>{0.5, 0.75, 0.9} : a.d0;
    const double h = a.h.empty() ? 0.01 : a.h.front();
    Table t = scan_table(run_disc_scan(opt.order, d0s, Ds, opt, h));
    t.metadata = options_metadata(opt);
    t.metadata.erase("d0");
    t.metadata.erase("cfl");
    t.metadata.erase("integrator");
    t.metadata.erase("dt_law");
    std::ostringstream hs;
    hs.precision(17);
    hs << h;
    t.metadata["h"] = hs.str();
    emit(t, a.out);
  } else if (pr->parsed()) {
    std::vector<double> hs = a.h;
    if (hs.empty()) {
      for (int e = 3; e <= 10; ++e) hs.push_back(std::ldexp(1.0, -e));
    }
    const std::vector<double> d0s = a.d0.empty() ? std::vector<double>{0.1, 0.5, 0.9} : a.d0;
    Table t = property_r_table(run_property_r(a.order, d0s, hs, opt));
    t.metadata = options_metadata(opt);
    for (const char* k : {"order", "d0", "cfl", "integrator", "dt_law"}) t.metadata.erase(k);
    emit(t, a.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const StateError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
