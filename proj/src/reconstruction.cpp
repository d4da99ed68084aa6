#include "cweno/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cweno/smoothness.hpp"

namespace cweno {

CwenoConfig CwenoConfig::for_order(int order, double d0, double eps_hat, int eps_power, int t) {
  if (order != 3 && order != 5 && order != 7 && order != 9) {
    throw std::invalid_argument("CWENO order must be 3, 5, 7 or 9 (got " + std::to_string(order) + ")");
  }
  CwenoConfig cfg;
  cfg.g = (order - 1) / 2;
  cfg.d0 = d0;
  cfg.d = linear_coefficients(cfg.g, d0);
  cfg.eps_hat = eps_hat;
  cfg.eps_power = eps_power;
  cfg.t = t;
  cfg.validate();
  return cfg;
}

double CwenoConfig::epsilon(double h) const {
  double e = eps_hat;
  for (int i = 0; i < eps_power; ++i) e *= h;
  return e;
}

void CwenoConfig::validate() const {
  if (g < 1 || g > kMaxHalfDegree) throw std::invalid_argument("CwenoConfig: g must be in 1..4");
  if (static_cast<int>(d.size()) != g + 2) {
    throw std::invalid_argument("CwenoConfig: need g+2 linear coefficients");
  }
  if (!(d[0] > 0.0)) throw std::invalid_argument("CwenoConfig: d_0 must be nonzero");
  double sum = 0.0;
  for (double dk : d) {
    if (!(dk >= 0.0 && dk <= 1.0)) throw std::invalid_argument("CwenoConfig: d_k must lie in [0, 1]");
    sum += dk;
  }
  if (std::abs(sum - 1.0) > 1e-14) throw std::invalid_argument("CwenoConfig: d_k must sum to 1");
  if (!(eps_hat >= 0.0)) throw std::invalid_argument("CwenoConfig: eps_hat must be nonnegative");
  if (eps_power < 0 || eps_power > 2) throw std::invalid_argument("CwenoConfig: eps power must be 0, 1 or 2");
  if (t < 2) throw std::invalid_argument("CwenoConfig: exponent t must be at least 2");
}

std::vector<double> linear_coefficients(int g, double d0) {
  if (g < 1 || g > kMaxHalfDegree) throw std::invalid_argument("linear_coefficients: g must be in 1..4");
  if (!(d0 > 0.0 && d0 < 1.0)) throw std::invalid_argument("linear_coefficients: d0 must lie in (0, 1)");
  const int mhat = g + 1;
  std::vector<double> d(static_cast<std::size_t>(mhat) + 1);
  d[0] = d0;
  double total = 0.0;
  for (int j = 1; j <= mhat; ++j) total += std::min(j, mhat + 1 - j);
  for (int j = 1; j <= mhat; ++j) d[static_cast<std::size_t>(j)] = std::min(j, mhat + 1 - j) / total * (1.0 - d0);
  return d;
}

StencilGammas StencilGammas::uniform(int g) {
  StencilGammas s;
  s.optimal = GammaTable::uniform(g, 2 * g + 1);
  for (int r = 0; r <= g; ++r) s.low[static_cast<std::size_t>(r)] = GammaTable::uniform(r, g + 1);
  return s;
}

StencilGammas StencilGammas::from_geometry(int g, const StencilGeometry& geometry) {
  StencilGammas s;
  s.optimal = GammaTable::from_geometry(g, 2 * g + 1, geometry);
  for (int r = 0; r <= g; ++r) {
    s.low[static_cast<std::size_t>(r)] = GammaTable::from_geometry(r, g + 1, geometry);
  }
  return s;
}

struct CwenoReconstructor::Work {
  std::array<Poly, kMaxCandidates> p;  // p[0] = P_0, p[k] = degree-g candidate k
  Poly opt;
  std::array<double, kMaxCandidates> ind{};
  std::array<double, kMaxCandidates> omega{};
  double ind_opt = 0.0;
  Poly rec;
};

CwenoReconstructor::CwenoReconstructor(CwenoConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.d.empty()) cfg_.d = linear_coefficients(cfg_.g, cfg_.d0);
  cfg_.validate();
  uniform_ = StencilGammas::uniform(cfg_.g);
}

void CwenoReconstructor::run(std::span<const double> averages, std::span<const double> sizes,
                             const StencilGammas& gammas, double center, double scale,
                             double width, Work& w, bool want_details) const {
  const int g = cfg_.g;
  const int n = 2 * g + 1;
  if (static_cast<int>(averages.size()) != n) {
    throw std::invalid_argument("cweno: stencil must hold 2g+1 averages");
  }
  const bool divided = !sizes.empty();

  // dd[p-1][j+g] = difference of order p starting at offset j
  double dd[kMaxCoeffs][kMaxCoeffs];
  for (int j = 0; j < n; ++j) dd[0][j] = averages[static_cast<std::size_t>(j)];
  for (int p = 2; p <= n; ++p) {
    for (int j = 0; j + p - 1 < n; ++j) {
      double span = p;
      if (divided) {
        span = 0.0;
        for (int i = j; i <= j + p - 1; ++i) span += sizes[static_cast<std::size_t>(i)];
      }
      dd[p - 1][j] = (dd[p - 2][j + 1] - dd[p - 2][j]) / span;
    }
  }

  auto build = [&](int k, int r, const GammaTable& gamma) {
    Poly q = Poly::zero(k, center, scale);
    const int col = g - r;
    for (int i = 1; i <= k + 1; ++i) {
      const double delta = dd[i - 1][col];
      for (int m = 1; m <= i; ++m) q.coeff(m - 1) += delta * gamma(i, m);
    }
    return q;
  };

  const double ubar = averages[static_cast<std::size_t>(g)];
  const auto& d = cfg_.d;
  const int mhat = g + 1;

  w.opt = build(2 * g, g, gammas.optimal);
  for (int k = 1; k <= mhat; ++k) {
    const int r = g - k + 1;
    w.p[static_cast<std::size_t>(k)] = build(g, r, gammas.low[static_cast<std::size_t>(r)]);
  }

  // P_0 written around the central average so constant data stay exactly constant
  Poly& p0 = w.p[0];
  p0 = w.opt;
  p0.coeff(0) -= ubar;
  for (int k = 1; k <= mhat; ++k) {
    const Poly& pk = w.p[static_cast<std::size_t>(k)];
    const double dk = d[static_cast<std::size_t>(k)];
    p0.coeff(0) -= dk * (pk.coeff(0) - ubar);
    for (int i = 1; i <= g; ++i) p0.coeff(i) -= dk * pk.coeff(i);
  }
  p0 *= 1.0 / d[0];
  p0.coeff(0) += ubar;

  for (int k = 0; k <= mhat; ++k) w.ind[static_cast<std::size_t>(k)] = jiang_shu(w.p[static_cast<std::size_t>(k)], width);
  if (want_details) w.ind_opt = jiang_shu(w.opt, width);

  // alpha_k = d_k / (I_k + eps)^t, normalized by the smallest denominator to avoid overflow
  const double eps = cfg_.epsilon(width);
  double smin = w.ind[0] + eps;
  for (int k = 1; k <= mhat; ++k) smin = std::min(smin, w.ind[static_cast<std::size_t>(k)] + eps);
  double total = 0.0;
  for (int k = 0; k <= mhat; ++k) {
    const double s = w.ind[static_cast<std::size_t>(k)] + eps;
    double a = 0.0;
    if (smin == 0.0) {
      a = s == 0.0 ? d[static_cast<std::size_t>(k)] : 0.0;
    } else {
      const double ratio = smin / s;
      double rt = 1.0;
      for (int e = 0; e < cfg_.t; ++e) rt *= ratio;
      a = d[static_cast<std::size_t>(k)] * rt;
    }
    w.omega[static_cast<std::size_t>(k)] = a;
    total += a;
  }
  for (int k = 0; k <= mhat; ++k) w.omega[static_cast<std::size_t>(k)] /= total;

  w.rec = Poly::zero(2 * g, center, scale);
  double dev0 = 0.0;
  for (int k = 0; k <= mhat; ++k) {
    const Poly& pk = w.p[static_cast<std::size_t>(k)];
    const double om = w.omega[static_cast<std::size_t>(k)];
    dev0 += om * (pk.coeff(0) - ubar);
    for (int i = 1; i <= pk.degree(); ++i) w.rec.coeff(i) += om * pk.coeff(i);
  }
  w.rec.coeff(0) = ubar + dev0;
}

CwenoResult CwenoReconstructor::reconstruct(std::span<const double> averages,
                                            const StencilGeometry& geometry) const {
  const int g = cfg_.g;
  if (!geometry.covers(-g, g)) throw std::invalid_argument("cweno: geometry must cover offsets -g..g");
  std::array<double, kMaxCoeffs> sizes{};
  bool uniform = true;
  const double h0 = geometry.size(0);
  for (int j = -g; j <= g; ++j) {
    sizes[static_cast<std::size_t>(j + g)] = geometry.size(j);
    if (std::abs(geometry.size(j) - h0) > 1e-12 * h0) uniform = false;
  }
  Work w;
  if (uniform) {
    run(averages, {}, uniform_, geometry.center, h0, h0, w, true);
  } else {
    const StencilGammas gammas = StencilGammas::from_geometry(g, geometry);
    run(averages, std::span<const double>(sizes.data(), static_cast<std::size_t>(2 * g + 1)), gammas,
        geometry.center, 1.0, h0, w, true);
  }
  CwenoResult out;
  out.rec = w.rec;
  out.optimal = w.opt;
  out.p0 = w.p[0];
  out.optimal_indicator = w.ind_opt;
  out.omegas.assign(w.omega.begin(), w.omega.begin() + cfg_.candidates());
  out.indicators.assign(w.ind.begin(), w.ind.begin() + cfg_.candidates());
  return out;
}

Poly CwenoReconstructor::reconstruct_poly(std::span<const double> averages,
                                          std::span<const double> sizes,
                                          const StencilGammas& gammas, double center, double scale,
                                          double width) const {
  Work w;
  run(averages, sizes, gammas, center, scale, width, w, false);
  return w.rec;
}

CwenoResult cweno_reconstruct(std::span<const double> averages, const StencilGeometry& geometry,
                              const CwenoConfig& cfg) {
  return CwenoReconstructor(cfg).reconstruct(averages, geometry);
}

namespace {

// Coefficients c[l] with P(xi) = sum_l c[l] * u_{l-g} for the interpolant of
// degree k and offset r on a uniform stencil of 2g+1 cells (scaled coordinate).
std::array<double, kMaxCoeffs> point_weights(int g, int k, int r, double xi) {
  std::array<double, kMaxCoeffs> c{};
  const int n = 2 * g + 1;
  const GammaTable gamma = GammaTable::uniform(r, k + 1);
  for (int l = 0; l < n; ++l) {
    std::array<double, kMaxCoeffs> e{};
    e[static_cast<std::size_t>(l)] = 1.0;
    const DiffTable diffs = build_diff_table(std::span<const double>(e.data(), static_cast<std::size_t>(n)),
                                             {}, DiffMode::undivided, -g);
    if (!diffs.contains(-r, k + 1)) continue;
    c[static_cast<std::size_t>(l)] = interpolant(k, r, diffs, gamma, 0.0, 1.0)(xi);
  }
  return c;
}

void require_boundary_point(double xi) {
  if (std::abs(std::abs(xi) - 0.5) > 1e-14) {
    throw std::domain_error("WENO point reconstruction is only available at cell boundaries");
  }
}

}  // namespace

std::vector<double> weno_linear_weights(int g, double xi) {
  if (g < 1 || g > kMaxHalfDegree) throw std::invalid_argument("weno_linear_weights: g must be in 1..4");
  require_boundary_point(xi);
  const int n = 2 * g + 1;
  const auto opt = point_weights(g, 2 * g, g, xi);
  std::vector<std::array<double, kMaxCoeffs>> cand(static_cast<std::size_t>(g) + 1);
  for (int k = 1; k <= g + 1; ++k) cand[static_cast<std::size_t>(k - 1)] = point_weights(g, g, g - k + 1, xi);
  // forward substitution: average l = 0..g is touched only by candidates 1..l+1
  std::vector<double> d(static_cast<std::size_t>(g) + 1, 0.0);
  for (int l = 0; l <= g; ++l) {
    double rest = opt[static_cast<std::size_t>(l)];
    for (int k = 1; k <= l; ++k) rest -= d[static_cast<std::size_t>(k - 1)] * cand[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l)];
    d[static_cast<std::size_t>(l)] = rest / cand[static_cast<std::size_t>(l)][static_cast<std::size_t>(l)];
  }
  (void)n;
  return d;
}

double weno_reconstruct_point(std::span<const double> averages, double xi, int g, double eps,
                              int t) {
  require_boundary_point(xi);
  const int n = 2 * g + 1;
  if (static_cast<int>(averages.size()) != n) {
    throw std::invalid_argument("weno_reconstruct_point: stencil must hold 2g+1 averages");
  }
  const std::vector<double> d = weno_linear_weights(g, xi);
  const DiffTable diffs = build_diff_table(averages, {}, DiffMode::undivided, -g);
  std::array<double, kMaxCandidates> value{};
  std::array<double, kMaxCandidates> s{};
  double smin = 0.0;
  for (int k = 1; k <= g + 1; ++k) {
    const int r = g - k + 1;
    const Poly p = interpolant(g, r, diffs, GammaTable::uniform(r, g + 1), 0.0, 1.0);
    value[static_cast<std::size_t>(k - 1)] = p(xi);
    s[static_cast<std::size_t>(k - 1)] = jiang_shu(p, 1.0) + eps;
    smin = k == 1 ? s[0] : std::min(smin, s[static_cast<std::size_t>(k - 1)]);
  }
  double num = 0.0;
  double den = 0.0;
  for (int k = 0; k <= g; ++k) {
    double a = 0.0;
    if (smin == 0.0) {
      a = s[static_cast<std::size_t>(k)] == 0.0 ? d[static_cast<std::size_t>(k)] : 0.0;
    } else {
      a = d[static_cast<std::size_t>(k)] * std::pow(smin / s[static_cast<std::size_t>(k)], t);
    }
    num += a * value[static_cast<std::size_t>(k)];
    den += a;
  }
  return num / den;
}

}  // namespace cweno
