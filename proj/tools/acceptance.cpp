// Runs every primary acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cweno/harness.hpp"
#include "cweno/poly.hpp"
#include "cweno/quadrature.hpp"
#include "cweno/reconstruction.hpp"
#include "cweno/smoothness.hpp"

using namespace cweno;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  template <class T>
  Detail& operator<<(const T& v) {
    os_ << v;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

constexpr double kPi = 3.14159265358979323846;

Outcome gamma_tables() {
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
  int checked = 0, wrong = 0;
  auto check = [&](int r, int i, int m, double want) {
    ++checked;
    if (big_gamma_uniform(r, i, m) != want) ++wrong;
  };
  for (int i = 1; i <= 7; ++i)
    for (int m = 1; m <= i; ++m) check(3, i, m, r3[i - 1][m - 1]);
  for (int i = 1; i <= 5; ++i)
    for (int m = 1; m <= i; ++m) check(2, i, m, r2[i - 1][m - 1]);
  for (int i = 1; i <= 4; ++i)
    for (int m = 1; m <= i; ++m) {
      check(1, i, m, r1[i - 1][m - 1]);
      check(0, i, m, r0[i - 1][m - 1]);
    }
  return {wrong == 0, (Detail() << checked << " entries, " << wrong << " mismatches").str()};
}

double third_order_jump_ratio(double d0) {
  const std::vector<double> u = {1.0, 0.0, 0.0};
  const std::vector<double> h(3, 1.0 / 64);
  CwenoConfig cfg;
  cfg.g = 1;
  cfg.d0 = d0;
  cfg.d = d0 < 1.0 ? linear_coefficients(1, d0) : std::vector<double>{1.0, 0.0, 0.0};
  const CwenoResult r = cweno_reconstruct(u, StencilGeometry{h, -1, 0.0}, cfg);
  return r.indicators[0] / r.optimal_indicator;
}

Outcome jump_ratio_closed_form() {
  Outcome o;
  Detail d;
  for (double d0 : {0.25, 0.5, 0.75, 1.0}) {
    const double got = third_order_jump_ratio(d0);
    const double want = (3 * d0 * d0 - 6 * d0 + 16) / (16 * d0 * d0);
    const bool ok = std::abs(got - want) <= 1e-12 * std::abs(want);
    o.pass = o.pass && ok;
    d << "d0=" << d0 << ": " << got << " vs " << want << (ok ? "" : " (x)") << "; ";
  }
  o.detail = d.str();
  return o;
}

// Slope from the last pair whose finer error is above the roundoff floor.
double unsaturated_rate(const std::vector<ConvergenceRow>& rows, double floor) {
  for (std::size_t i = rows.size(); i-- > 1;) {
    if (rows[i].error >= floor) return rows[i].rate;
  }
  return std::nan("");
}

Outcome advection_slopes() {
  Outcome o;
  Detail d;
  for (int order : {3, 5, 7, 9}) {
    Options opt;
    opt.order = order;
    const auto rows = run_convergence("advect_low", {40, 80, 160, 320, 640}, opt);
    const double rate = unsaturated_rate(rows, 1e-12);
    const bool ok = std::abs(rate - order) <= 0.3;
    o.pass = o.pass && ok;
    d << "order " << order << ": " << rate << (ok ? "" : " (x)") << "; ";
  }
  o.detail = d.str();
  return o;
}

std::vector<double> sin_averages(int g, double x0, double h) {
  std::vector<double> u;
  for (int j = -g; j <= g; ++j) {
    const double a = x0 + (j - 0.5) * h;
    u.push_back((std::cos(a) - std::cos(a + h)) / h);
  }
  return u;
}

Outcome weight_convergence() {
  Outcome o;
  Detail d;
  for (int p = 1; p <= 2; ++p) {
    for (int g = 1; g <= 4; ++g) {
      const CwenoReconstructor rec(CwenoConfig::for_order(2 * g + 1, 0.75, 1.0, p));
      std::vector<double> le, lh;
      for (int e = 4; e <= 7; ++e) {
        const double h = std::ldexp(1.0, -e);
        const auto u = sin_averages(g, 0.7, h);
        const std::vector<double> hs(u.size(), h);
        const CwenoResult r = rec.reconstruct(u, StencilGeometry{hs, -g, 0.7});
        double dev = 0.0;
        for (std::size_t k = 0; k < r.omegas.size(); ++k) dev = std::max(dev, std::abs(r.omegas[k] - rec.config().d[k]));
        le.push_back(std::log(dev));
        lh.push_back(std::log(h));
      }
      const double slope = (le.back() - le.front()) / (lh.back() - lh.front());
      const bool ok = std::abs(slope - (g + 2 - p)) <= 0.4;
      o.pass = o.pass && ok;
      d << "p=" << p << ",g=" << g << ": " << slope << (ok ? "" : " (x)") << "; ";
    }
  }
  o.detail = d.str();
  return o;
}

Outcome swe_convergence() {
  Options opt;
  opt.order = 5;
  const auto rows = run_convergence("swe_smooth", {16, 32, 64, 128, 256}, opt);
  const double rate = rows.back().rate;
  const double err = rows.back().error;
  const double target = 1.82e-8;
  const bool ok = std::abs(rate - 4.9) <= 0.3 && err <= 3 * target && err >= target / 3;
  return {ok, (Detail() << "rate at N=256 " << rate << ", error " << err << " (target " << target << ")").str()};
}

Outcome well_balance() {
  Options opt;
  double worst = 0.0;
  Detail d;
  for (int order : {3, 5, 7, 9}) {
    double w = 0.0;
    for (int N : {100, 200, 400}) w = std::max(w, run_wellbalance(order, N, opt).max_q);
    d << "order " << order << ": " << w << "; ";
    worst = std::max(worst, w);
  }
  return {worst <= 1e-12, d.str()};
}

Outcome disc_scan() {
  std::vector<double> Ds;
  for (int i = 1; i <= 99; ++i) Ds.push_back(i / 100.0);
  double lo = 1.0, hi = 0.0;
  for (int order : {3, 5, 7}) {
    for (const auto& r : run_disc_scan(order, {0.5, 0.75, 0.9}, Ds, Options{})) {
      lo = std::min(lo, r.min);
      hi = std::max(hi, r.max);
    }
  }
  return {lo >= -1e-12 && hi <= 1 + 1e-12, (Detail() << "min " << lo << ", max " << hi).str()};
}

Outcome property_r() {
  std::vector<double> hs;
  for (int e = 3; e <= 10; ++e) hs.push_back(std::ldexp(1.0, -e));
  double lo = 1e300;
  for (const auto& r : run_property_r({3, 5, 7, 9}, {0.1, 0.5, 0.9}, hs, Options{})) lo = std::min(lo, r.ratio);
  return {lo >= 0.01, (Detail() << "smallest ratio " << lo).str()};
}

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

Outcome property_suite() {
  Outcome o;
  Detail d;
  std::string failures;
  auto note = [&](const std::string& name, bool ok) {
    o.pass = o.pass && ok;
    if (!ok) failures += name + " failed; ";
  };
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  std::uniform_real_distribution<double> H(0.5, 1.5);

  double norm_err = 0.0, avg_err = 0.0, exact_err = 0.0;
  for (int g = 1; g <= 4; ++g) {
    const CwenoReconstructor rec(CwenoConfig::for_order(2 * g + 1));
    const std::size_t n = static_cast<std::size_t>(2 * g + 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> u(n), h(n);
      for (auto& v : u) v = trial % 3 == 0 ? (U(rng) > 0 ? 1.0 : 0.0) : U(rng);
      for (auto& v : h) v = trial % 2 ? 0.01 : 0.01 * H(rng);
      const CwenoResult r = rec.reconstruct(u, StencilGeometry{h, -g, 0.37});
      double s = 0.0;
      for (double w : r.omegas) s += w;
      norm_err = std::max(norm_err, std::abs(s - 1.0));
      const double hc = h[static_cast<std::size_t>(g)];
      const double ubar = u[static_cast<std::size_t>(g)];
      avg_err = std::max(avg_err, std::abs(cell_average(r.rec, 0.37 - hc / 2, 0.37 + hc / 2) - ubar) /
                                      std::max(1.0, std::abs(ubar)));

      // polynomial data of degree g on the same cells
      std::vector<double> c(static_cast<std::size_t>(g) + 1);
      for (auto& v : c) v = U(rng) / 2;
      std::vector<double> edges(n + 1, 0.0);
      for (std::size_t j = 0; j < n; ++j) edges[j + 1] = edges[j] + h[j];
      auto prim = [&](double x) {
        double acc = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k] / static_cast<double>(k + 1);
        return acc * x;
      };
      std::vector<double> pu(n);
      for (std::size_t j = 0; j < n; ++j) pu[j] = (prim(edges[j + 1]) - prim(edges[j])) / h[j];
      const double center = 0.5 * (edges[static_cast<std::size_t>(g)] + edges[static_cast<std::size_t>(g) + 1]);
      const CwenoResult pr = rec.reconstruct(pu, StencilGeometry{h, -g, center});
      for (double sft : {-0.5, 0.0, 0.5}) {
        const double x = center + sft * hc;
        double f = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) f = f * x + c[k];
        exact_err = std::max(exact_err, std::abs(pr.rec(x) - f));
      }
    }
  }
  note("weight normalization", norm_err <= 1e-14);
  note("cell average", avg_err <= 1e-13);
  note("polynomial exactness", exact_err <= 1e-10);
  d << "sum w-1 " << norm_err << ", avg " << avg_err << ", exact " << exact_err;

  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_real_distribution<double> logh(-4.0, 0.0);
  double ind_err = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int k = deg(rng);
    const double h = std::pow(10.0, logh(rng));
    std::vector<double> c(static_cast<std::size_t>(k) + 1);
    for (auto& v : c) v = U(rng);
    const Poly p(U(rng), trial % 2 ? h : 1.0, c);
    const double q = indicator_by_quadrature(p, h);
    if (q > 0.0) ind_err = std::max(ind_err, std::abs(jiang_shu(p, h) - q) / q);
  }
  note("indicator closed form", ind_err <= 1e-13);
  d << ", indicator " << ind_err;

  std::vector<double> u(9), h(9);
  for (auto& v : u) v = U(rng);
  for (auto& v : h) v = H(rng);
  const DiffTable div = build_diff_table(u, h, DiffMode::divided, -4);
  double rec_err = 0.0;
  for (int p = 2; p <= 9; ++p)
    for (int j = -4; j + p - 1 <= 4; ++j) {
      double span = 0.0;
      for (int i = j; i <= j + p - 1; ++i) span += h[static_cast<std::size_t>(i + 4)];
      const double want = (div(j + 1, p - 1) - div(j, p - 1)) / span;
      rec_err = std::max(rec_err, std::abs(div(j, p) - want) / std::max(1.0, std::abs(want)));
    }
  note("difference recurrence", rec_err <= 1e-14);
  d << ", recurrence " << rec_err;

  double mass_err = 0.0;
  for (const char* id : {"advect_high", "burgers"}) {
    for (int order : {3, 5, 7, 9}) {
      Options opt;
      opt.order = order;
      opt.N = 60;
      opt.grid = "random:2";
      opt.t_end = 0.3;
      const NamedRun run = run_named_test(id, opt);
      const double m0 = run.problem.initial.total()[0];
      const double m1 = run.snapshots.back().total()[0];
      mass_err = std::max(mass_err, std::abs(m1 - m0) / std::max(1.0, std::abs(m0)));
    }
  }
  note("mass conservation", mass_err <= 1e-12);
  d << ", mass " << mass_err;

  double tv_excess = -1e300;
  for (int order : {3, 5, 7, 9}) {
    Options opt;
    opt.order = order;
    opt.N = 160;
    opt.t_end = 1.0 / (2 * kPi);
    const NamedRun run = run_named_test("burgers", opt);
    tv_excess = std::max(tv_excess, total_variation(run.snapshots.back()) - total_variation(run.problem.initial));
  }
  note("burgers total variation", tv_excess <= 0.05);
  d << ", TV growth " << tv_excess;

  o.detail = failures + d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"gamma tables", gamma_tables},
      {"third-order jump ratio closed form", jump_ratio_closed_form},
      {"smooth advection slopes", advection_slopes},
      {"weight convergence", weight_convergence},
      {"shallow water convergence", swe_convergence},
      {"well-balancing", well_balance},
      {"non-oscillation scan", disc_scan},
      {"indicator ratio lower bound", property_r},
      {"property suite", property_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
