#include "cweno/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#ifdef CWENO_HAVE_OPENMP
#include <omp.h>
#endif

namespace cweno {

SourceQuadrature SourceQuadrature::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("quadrature must be gauss:<n> or richardson:<q>");
  const std::string kind = text.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad quadrature size in '" + text + "'");
  }
  SourceQuadrature q;
  if (kind == "gauss") {
    q.kind = Kind::gauss;
    if (n < 1 || n > 16) throw std::invalid_argument("gauss quadrature needs 1..16 points");
  } else if (kind == "richardson") {
    q.kind = Kind::richardson;
    if (n != 4 && n != 6 && n != 8 && n != 10) throw std::invalid_argument("richardson order must be 4, 6, 8 or 10");
  } else {
    throw std::invalid_argument("unknown quadrature '" + kind + "'");
  }
  q.n = n;
  return q;
}

std::string SourceQuadrature::str() const {
  return (kind == Kind::gauss ? "gauss:" : "richardson:") + std::to_string(n);
}

void RunConfig::validate() const {
  cweno.validate();
  if (!(cfl > 0.0 && cfl < 1.0)) throw std::invalid_argument("cfl must lie in (0, 1)");
  if (!(t_end >= 0.0)) throw std::invalid_argument("final time must be nonnegative");
  if (tableau) tableau->validate();
  if (quad) SourceQuadrature::parse(quad->str());
}

SourceQuadrature RunConfig::source_quadrature() const {
  if (quad) return *quad;
  SourceQuadrature q;
  if (well_balanced) {
    q.kind = SourceQuadrature::Kind::richardson;
    q.n = cweno.order() + 1;
  } else {
    q.kind = SourceQuadrature::Kind::gauss;
    q.n = cweno.g + 1;
  }
  return q;
}

Field::Field(std::shared_ptr<const Grid1D> g, int components)
    : grid(std::move(g)), m(components), u(static_cast<std::size_t>(grid->cells() * components), 0.0) {}

State Field::state(int j) const {
  State s{};
  for (int c = 0; c < m; ++c) s[static_cast<std::size_t>(c)] = at(j, c);
  return s;
}

void Field::set_state(int j, const State& s) {
  for (int c = 0; c < m; ++c) at(j, c) = s[static_cast<std::size_t>(c)];
}

State Field::total() const {
  State s{};
  for (int j = 0; j < cells(); ++j)
    for (int c = 0; c < m; ++c) s[static_cast<std::size_t>(c)] += grid->size(j) * at(j, c);
  return s;
}

Field averages_of(std::shared_ptr<const Grid1D> grid, int m, const std::function<State(double)>& f) {
  Field field(std::move(grid), m);
  const QuadratureRule rule = gauss_legendre(10);
  for (int j = 0; j < field.cells(); ++j) {
    State acc{};
    const double c = field.grid->center(j);
    const double h = field.grid->size(j);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const State v = f(c + h * rule.nodes[k]);
      for (int q = 0; q < m; ++q) acc[static_cast<std::size_t>(q)] += rule.weights[k] * v[static_cast<std::size_t>(q)];
    }
    field.set_state(j, acc);
  }
  return field;
}

State llf_flux(const State& uL, const State& uR, const Model& model) {
  const State fL = model.flux(uL);
  const State fR = model.flux(uR);
  const double a = std::max(model.max_speed(uL), model.max_speed(uR));
  State F{};
  for (int c = 0; c < model.components(); ++c) {
    const auto k = static_cast<std::size_t>(c);
    F[k] = 0.5 * (fL[k] + fR[k]) - 0.5 * a * (uR[k] - uL[k]);
  }
  return F;
}

double desingularized_velocity(double h, double q, double eps) {
  const double h2 = h * h;
  const double den = h2 + std::max(h2, eps * eps);
  return den > 0.0 ? 2.0 * h * q / den : 0.0;
}

std::vector<double> richardson_weights(int order) {
  switch (order) {
    case 4: return {-1.0 / 3, 4.0 / 3};
    case 6: return {1.0 / 45, -20.0 / 45, 64.0 / 45};
    case 8: return {-1.0 / 2835, 84.0 / 2835, -1344.0 / 2835, 4096.0 / 2835};
    case 10:
      return {0.000001383269357, -0.000470311581423, 0.031604938271605, -0.481599059376837,
              1.450463049417298};
    default: throw std::invalid_argument("richardson order must be 4, 6, 8 or 10");
  }
}

double richardson_combine(std::span<const double> trapezoid, int order) {
  const std::vector<double> w = richardson_weights(order);
  if (trapezoid.size() != w.size()) throw std::invalid_argument("richardson_combine: wrong number of levels");
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * trapezoid[i];
  return s;
}

State source_quadrature_gauss(const std::function<State(double)>& state_at, double left, double right,
                              const Model& model, int n) {
  const QuadratureRule rule = gauss_legendre(n);
  const double c = 0.5 * (left + right);
  const double h = right - left;
  State acc{};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = c + h * rule.nodes[k];
    const State s = model.source(state_at(x), x);
    for (int q = 0; q < model.components(); ++q) acc[static_cast<std::size_t>(q)] += rule.weights[k] * s[static_cast<std::size_t>(q)];
  }
  return acc;
}

double hydrostatic_source(std::span<const double> surface, std::span<const double> bottom, double g,
                          int order) {
  const int levels = order / 2;
  const std::size_t nmax = std::size_t{1} << (levels - 1);
  if (surface.size() != nmax + 1 || bottom.size() != nmax + 1) {
    throw std::invalid_argument("hydrostatic_source: need 2^k + 1 nodes for this order");
  }
  std::array<double, 5> sums{};
  for (int l = 0; l < levels; ++l) {
    const std::size_t stride = nmax >> l;
    double s = 0.0;
    for (std::size_t k = 0; k + stride <= nmax; k += stride) {
      // bottom clipped at the surface, matching h = max(0, H - z) in the interface fluxes
      const double z0 = std::min(bottom[k], surface[k]);
      const double z1 = std::min(bottom[k + stride], surface[k + stride]);
      const double h0 = surface[k] - z0;
      const double h1 = surface[k + stride] - z1;
      s -= g * 0.5 * (h0 + h1) * (z1 - z0);
    }
    sums[static_cast<std::size_t>(l)] = s;
  }
  return richardson_combine(std::span<const double>(sums.data(), static_cast<std::size_t>(levels)), order);
}

namespace {

// Runs body(i) for i in [lo, hi), rethrowing the first exception after the loop.
template <class F>
void parallel_for(int lo, int hi, F&& body) {
  std::exception_ptr error;
#ifdef CWENO_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = lo; i < hi; ++i) {
    try {
      body(i);
    } catch (...) {
#ifdef CWENO_HAVE_OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

SpatialOperator::SpatialOperator(const Model& model, std::shared_ptr<const Grid1D> grid, const RunConfig& cfg)
    : model_(model),
      grid_(std::move(grid)),
      cfg_(cfg),
      rec_(cfg.cweno),
      m_(model.components()),
      g_(cfg.cweno.g),
      width_(cfg.cweno.g + 1),
      uniform_(grid_->is_uniform(1e-10)),
      quad_(cfg.source_quadrature()) {
  cfg_.validate();
  swe_ = dynamic_cast<const ShallowWater*>(&model_);
  if (cfg_.well_balanced && !swe_) throw std::invalid_argument("well-balanced mode needs the shallow water model");
  if (cfg_.well_balanced && quad_.kind != SourceQuadrature::Kind::richardson) {
    throw std::invalid_argument("well-balanced mode needs a richardson source quadrature");
  }
  if (cfg_.recon == Reconstruction::weno) {
    if (!uniform_) throw std::invalid_argument("WENO comparison runs need a uniform grid");
    if (model_.has_source()) throw std::invalid_argument("WENO comparison runs do not support source terms");
  }
  const int n = grid_->cells();
  if (n < width_) throw std::invalid_argument("grid has fewer cells than the stencil half width");
  odd_ = model_.odd_components();

  geo_.resize(static_cast<std::size_t>(n) + 2);
  for (int i = -1; i <= n; ++i) {
    CellGeometry& cg = geo_[static_cast<std::size_t>(i + 1)];
    cg.width = grid_->padded_size(i);
    if (i < 0) {
      cg.center = grid_->a() - 0.5 * cg.width;
    } else if (i >= n) {
      cg.center = grid_->b() + 0.5 * cg.width;
    } else {
      cg.center = grid_->center(i);
    }
    for (int k = -g_; k <= g_; ++k) cg.sizes[static_cast<std::size_t>(k + g_)] = grid_->padded_size(i + k);
    if (uniform_) {
      cg.scale = cg.width;
    } else {
      cg.scale = 1.0;
      cg.gammas = static_cast<int>(gammas_.size());
      const StencilGeometry sg{std::span<const double>(cg.sizes.data(), static_cast<std::size_t>(2 * g_ + 1)), -g_, 0.0};
      gammas_.push_back(StencilGammas::from_geometry(g_, sg));
    }
  }

  points_ = {-0.5, 0.5};
  if (model_.has_source()) {
    if (quad_.kind == SourceQuadrature::Kind::gauss) {
      gauss_ = gauss_legendre(quad_.n);
      points_.insert(points_.end(), gauss_.nodes.begin(), gauss_.nodes.end());
    } else {
      const int nmax = 1 << (quad_.n / 2 - 1);
      for (int k = 1; k < nmax; ++k) points_.push_back(-0.5 + static_cast<double>(k) / nmax);
    }
  }

  if (cfg_.well_balanced) {
    const Topography& bottom = swe_->bottom();
    std::vector<double> zbar;
    if (bottom.is_analytic()) {
      const QuadratureRule rule = gauss_legendre(10);
      for (int j = 0; j < n; ++j) {
        zbar.push_back(cell_mean(bottom.z, grid_->left(j), grid_->right(j), rule));
      }
    } else {
      zbar = bottom.cell_averages;
      if (static_cast<int>(zbar.size()) != n) throw std::invalid_argument("bottom averages do not match the grid");
    }
    bottom_pad_.assign(static_cast<std::size_t>(n + 2 * width_), 0.0);
    GhostPad{width_}.fill(*grid_, 1, zbar, bottom_pad_);
    const std::size_t np = points_.size();
    bottom_at_.assign(static_cast<std::size_t>(n + 2) * np, 0.0);
    for (int i = -1; i <= n; ++i) {
      const CellGeometry& cg = geo_[static_cast<std::size_t>(i + 1)];
      const std::span<const double> st(bottom_pad_.data() + (i + width_ - g_), static_cast<std::size_t>(2 * g_ + 1));
      const StencilGammas& gm = cg.gammas < 0 ? rec_.uniform_gammas() : gammas_[static_cast<std::size_t>(cg.gammas)];
      const std::span<const double> sizes = uniform_ ? std::span<const double>() : std::span<const double>(cg.sizes.data(), static_cast<std::size_t>(2 * g_ + 1));
      const Poly pz = rec_.reconstruct_poly(st, sizes, gm, cg.center, cg.scale, cg.width);
      for (std::size_t p = 0; p < np; ++p) {
        bottom_at_[static_cast<std::size_t>(i + 1) * np + p] = pz.local(points_[p] * cg.width / cg.scale);
      }
    }
  }
}

double SpatialOperator::desing_eps(int j) const {
  return cfg_.desing_eps > 0.0 ? cfg_.desing_eps : grid_->size(j);
}

void SpatialOperator::pad(std::span<const double> u, std::vector<double>& padded) const {
  const int n = grid_->cells();
  padded.assign(static_cast<std::size_t>((n + 2 * width_) * m_), 0.0);
  std::array<bool, kMaxComponents> odd{};
  for (int c = 0; c < m_; ++c) odd[static_cast<std::size_t>(c)] = odd_[static_cast<std::size_t>(c)];
  GhostPad{width_}.fill(*grid_, m_, u, padded, std::span<const bool>(odd.data(), static_cast<std::size_t>(m_)));
  if (cfg_.well_balanced) {
    for (int k = 0; k < n + 2 * width_; ++k) padded[static_cast<std::size_t>(k * m_)] += bottom_pad_[static_cast<std::size_t>(k)];
  }
}

void SpatialOperator::reconstruct_cell(int i, std::span<const double> padded, Poly* out) const {
  const CellGeometry& cg = geo_[static_cast<std::size_t>(i + 1)];
  const StencilGammas& gm = cg.gammas < 0 ? rec_.uniform_gammas() : gammas_[static_cast<std::size_t>(cg.gammas)];
  const std::span<const double> sizes = uniform_ ? std::span<const double>() : std::span<const double>(cg.sizes.data(), static_cast<std::size_t>(2 * g_ + 1));
  const int n = 2 * g_ + 1;
  const int first = i + width_ - g_;  // padded index of the leftmost stencil cell
  std::array<double, kMaxCoeffs> st{};

  if (cfg_.char_proj && m_ > 1) {
    State ubar{};
    const int pc = i + width_;
    for (int c = 0; c < m_; ++c) ubar[static_cast<std::size_t>(c)] = padded[static_cast<std::size_t>(pc * m_ + c)];
    if (cfg_.well_balanced) ubar[0] -= bottom_pad_[static_cast<std::size_t>(pc)];
    const Eigensystem e = model_.eigensystem(ubar);
    std::array<Poly, kMaxComponents> w;
    for (int k = 0; k < m_; ++k) {
      for (int l = 0; l < n; ++l) {
        double s = 0.0;
        for (int c = 0; c < m_; ++c) s += e.l(k, c) * padded[static_cast<std::size_t>((first + l) * m_ + c)];
        st[static_cast<std::size_t>(l)] = s;
      }
      w[static_cast<std::size_t>(k)] = rec_.reconstruct_poly(std::span<const double>(st.data(), static_cast<std::size_t>(n)), sizes, gm, cg.center, cg.scale, cg.width);
    }
    for (int c = 0; c < m_; ++c) {
      Poly p = Poly::zero(2 * g_, cg.center, cg.scale);
      for (int k = 0; k < m_; ++k) {
        Poly term = w[static_cast<std::size_t>(k)];
        term *= e.r(c, k);
        p += term;
      }
      out[c] = p;
    }
    return;
  }
  for (int c = 0; c < m_; ++c) {
    for (int l = 0; l < n; ++l) st[static_cast<std::size_t>(l)] = padded[static_cast<std::size_t>((first + l) * m_ + c)];
    out[c] = rec_.reconstruct_poly(std::span<const double>(st.data(), static_cast<std::size_t>(n)), sizes, gm, cg.center, cg.scale, cg.width);
  }
}

void SpatialOperator::weno_cell(int i, std::span<const double> padded, double* left, double* right) const {
  const CellGeometry& cg = geo_[static_cast<std::size_t>(i + 1)];
  const int n = 2 * g_ + 1;
  const int first = i + width_ - g_;
  const double eps = cfg_.cweno.epsilon(cg.width);
  std::array<double, kMaxCoeffs> st{};
  auto point = [&](std::span<const double> s, double xi) {
    return weno_reconstruct_point(s, xi, g_, eps, cfg_.cweno.t);
  };
  if (cfg_.char_proj && m_ > 1) {
    State ubar{};
    for (int c = 0; c < m_; ++c) ubar[static_cast<std::size_t>(c)] = padded[static_cast<std::size_t>((i + width_) * m_ + c)];
    const Eigensystem e = model_.eigensystem(ubar);
    State wl{}, wr{};
    for (int k = 0; k < m_; ++k) {
      for (int l = 0; l < n; ++l) {
        double s = 0.0;
        for (int c = 0; c < m_; ++c) s += e.l(k, c) * padded[static_cast<std::size_t>((first + l) * m_ + c)];
        st[static_cast<std::size_t>(l)] = s;
      }
      const std::span<const double> sp(st.data(), static_cast<std::size_t>(n));
      wl[static_cast<std::size_t>(k)] = point(sp, -0.5);
      wr[static_cast<std::size_t>(k)] = point(sp, 0.5);
    }
    const State ul = e.from_characteristic(wl);
    const State ur = e.from_characteristic(wr);
    for (int c = 0; c < m_; ++c) {
      left[c] = ul[static_cast<std::size_t>(c)];
      right[c] = ur[static_cast<std::size_t>(c)];
    }
    return;
  }
  for (int c = 0; c < m_; ++c) {
    for (int l = 0; l < n; ++l) st[static_cast<std::size_t>(l)] = padded[static_cast<std::size_t>((first + l) * m_ + c)];
    const std::span<const double> sp(st.data(), static_cast<std::size_t>(n));
    left[c] = point(sp, -0.5);
    right[c] = point(sp, 0.5);
  }
}

std::vector<Poly> SpatialOperator::reconstruct(std::span<const double> u) const {
  const int n = grid_->cells();
  if (cfg_.recon != Reconstruction::cweno) throw std::logic_error("reconstruct: only CWENO yields polynomials");
  std::vector<double> padded;
  pad(u, padded);
  std::vector<Poly> out(static_cast<std::size_t>(n * m_));
  parallel_for(0, n, [&](int j) { reconstruct_cell(j, padded, out.data() + static_cast<std::size_t>(j * m_)); });
  return out;
}

void SpatialOperator::rhs(std::span<const double> u, std::span<double> dudt) const {
  const int n = grid_->cells();
  const auto m = static_cast<std::size_t>(m_);
  if (u.size() != static_cast<std::size_t>(n) * m || dudt.size() != u.size()) {
    throw std::invalid_argument("rhs: field size does not match the grid");
  }
  std::vector<double> padded;
  pad(u, padded);
  const std::size_t np = points_.size();
  std::vector<double> vals(static_cast<std::size_t>(n + 2) * np * m);
  auto val = [&](int i, std::size_t p) { return vals.data() + (static_cast<std::size_t>(i + 1) * np + p) * m; };

  parallel_for(-1, n + 1, [&](int i) {
    if (cfg_.recon == Reconstruction::weno) {
      weno_cell(i, padded, val(i, 0), val(i, 1));
      return;
    }
    std::array<Poly, kMaxComponents> polys;
    reconstruct_cell(i, padded, polys.data());
    const CellGeometry& cg = geo_[static_cast<std::size_t>(i + 1)];
    for (std::size_t p = 0; p < np; ++p) {
      const double xi = points_[p] * cg.width / cg.scale;
      double* v = val(i, p);
      for (std::size_t c = 0; c < m; ++c) v[c] = polys[c].local(xi);
    }
  });

  // flux through the left and right face of every interior cell
  std::vector<State> fl(static_cast<std::size_t>(n)), fr(static_cast<std::size_t>(n));
  const bool wb = cfg_.well_balanced;
  const double grav = swe_ ? swe_->gravity() : 0.0;
  for (int f = 0; f <= n; ++f) {
    State a{}, b{};
    for (std::size_t c = 0; c < m; ++c) {
      a[c] = val(f - 1, 1)[c];
      b[c] = val(f, 0)[c];
    }
    if (!wb) {
      const State F = llf_flux(a, b, model_);
      if (f > 0) fr[static_cast<std::size_t>(f - 1)] = F;
      if (f < n) fl[static_cast<std::size_t>(f)] = F;
      continue;
    }
    const double zm = bottom_at_[static_cast<std::size_t>(f) * np + 1];
    const double zp = bottom_at_[static_cast<std::size_t>(f + 1) * np + 0];
    const double hm = std::max(0.0, a[0] - zm);
    const double hp = std::max(0.0, b[0] - zp);
    const double zs = std::max(zm, zp);
    const double hsm = std::max(0.0, a[0] - zs);
    const double hsp = std::max(0.0, b[0] - zs);
    const int jm = std::clamp(f - 1, 0, n - 1);
    const int jp = std::clamp(f, 0, n - 1);
    const double um = desingularized_velocity(hm, a[1], desing_eps(jm));
    const double up = desingularized_velocity(hp, b[1], desing_eps(jp));
    State F = llf_flux({hsm, hsm * um, 0.0}, {hsp, hsp * up, 0.0}, model_);
    if (f > 0) {
      State Fm = F;
      Fm[1] += 0.5 * grav * (hm * hm - hsm * hsm);
      fr[static_cast<std::size_t>(f - 1)] = Fm;
    }
    if (f < n) {
      State Fp = F;
      Fp[1] += 0.5 * grav * (hp * hp - hsp * hsp);
      fl[static_cast<std::size_t>(f)] = Fp;
    }
  }

  const bool source = model_.has_source();
  const int nmax = quad_.kind == SourceQuadrature::Kind::richardson ? 1 << (quad_.n / 2 - 1) : 0;
  parallel_for(0, n, [&](int j) {
    const double h = grid_->size(j);
    const auto jj = static_cast<std::size_t>(j);
    double* out = dudt.data() + jj * m;
    for (std::size_t c = 0; c < m; ++c) out[c] = -(fr[jj][c] - fl[jj][c]) / h;
    if (!source) return;
    // node k of the equispaced Richardson grid sits at point 0, 1 (ends) or k + 1
    auto node = [&](int k) { return k == 0 ? std::size_t{0} : k == nmax ? std::size_t{1} : static_cast<std::size_t>(k + 1); };
    if (wb) {
      std::array<double, 17> surface{}, bottom{};
      for (int k = 0; k <= nmax; ++k) {
        surface[static_cast<std::size_t>(k)] = val(j, node(k))[0];
        bottom[static_cast<std::size_t>(k)] = bottom_at_[(jj + 1) * np + node(k)];
      }
      const std::span<const double> sv(surface.data(), static_cast<std::size_t>(nmax + 1));
      const std::span<const double> bv(bottom.data(), static_cast<std::size_t>(nmax + 1));
      out[1] += hydrostatic_source(sv, bv, grav, quad_.n) / h;
      return;
    }
    const double xc = grid_->center(j);
    auto state_at = [&](std::size_t p) {
      State s{};
      for (std::size_t c = 0; c < m; ++c) s[c] = val(j, p)[c];
      return s;
    };
    State avg{};
    if (quad_.kind == SourceQuadrature::Kind::gauss) {
      for (std::size_t k = 0; k < gauss_.nodes.size(); ++k) {
        const double x = xc + h * gauss_.nodes[k];
        const State s = model_.source(state_at(k + 2), x);
        for (std::size_t c = 0; c < m; ++c) avg[c] += gauss_.weights[k] * s[c];
      }
    } else {
      // composite trapezoid means S_1, S_2, S_4, ... of the source
      std::array<State, 17> sv{};
      for (int k = 0; k <= nmax; ++k) sv[static_cast<std::size_t>(k)] = model_.source(state_at(node(k)), xc + h * (-0.5 + static_cast<double>(k) / nmax));
      const int levels = quad_.n / 2;
      for (std::size_t c = 0; c < m; ++c) {
        std::array<double, 5> t{};
        for (int l = 0; l < levels; ++l) {
          const int stride = nmax >> l;
          const int cells = nmax / stride;
          double s = 0.0;
          for (int k = 0; k <= nmax; k += stride) s += (k == 0 || k == nmax ? 0.5 : 1.0) * sv[static_cast<std::size_t>(k)][c];
          t[static_cast<std::size_t>(l)] = s / cells;
        }
        avg[c] = richardson_combine(std::span<const double>(t.data(), static_cast<std::size_t>(levels)), quad_.n);
      }
    }
    for (std::size_t c = 0; c < m; ++c) out[c] += avg[c];
  });
}

double SpatialOperator::max_speed(std::span<const double> u) const {
  double a = 0.0;
  State s{};
  for (int j = 0; j < grid_->cells(); ++j) {
    for (int c = 0; c < m_; ++c) s[static_cast<std::size_t>(c)] = u[static_cast<std::size_t>(j * m_ + c)];
    a = std::max(a, model_.max_speed(s));
  }
  return a;
}

double SpatialOperator::stable_dt(std::span<const double> u, int time_order) const {
  const double a = std::max(max_speed(u), 1e-300);
  double h = grid_->min_size();
  const int s = cfg_.cweno.order();
  if (cfg_.dt_law == DtLaw::order_matched && s > time_order) {
    h = std::min(h, std::pow(h, static_cast<double>(s) / time_order));
  }
  return cfg_.cfl * h / a;
}

namespace {

void check_finite(std::span<const double> v, int m, int stage, double t) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v[k])) {
      std::ostringstream os;
      os << "non-finite value in cell " << k / static_cast<std::size_t>(m) << ", component "
         << k % static_cast<std::size_t>(m);
      if (stage >= 0) os << ", stage " << stage;
      os << " at t = " << t;
      throw NumericalError(os.str());
    }
  }
}

}  // namespace

void rk_step(const SpatialOperator& op, const ButcherTableau& tab, Field& field, double dt) {
  const std::size_t n = field.u.size();
  const int s = tab.stages;
  std::vector<std::vector<double>> k(static_cast<std::size_t>(s), std::vector<double>(n));
  std::vector<double> y(n);
  for (int i = 0; i < s; ++i) {
    y = field.u;
    for (int j = 0; j < i; ++j) {
      const double a = tab.a(i, j);
      if (a == 0.0) continue;
      const double* kj = k[static_cast<std::size_t>(j)].data();
      for (std::size_t q = 0; q < n; ++q) y[q] += dt * a * kj[q];
    }
    op.rhs(y, k[static_cast<std::size_t>(i)]);
    check_finite(k[static_cast<std::size_t>(i)], field.m, i, field.t);
  }
  for (int i = 0; i < s; ++i) {
    const double b = tab.b[static_cast<std::size_t>(i)];
    if (b == 0.0) continue;
    const double* ki = k[static_cast<std::size_t>(i)].data();
    for (std::size_t q = 0; q < n; ++q) field.u[q] += dt * b * ki[q];
  }
  check_finite(field.u, field.m, -1, field.t + dt);
  field.t += dt;
}

Field run_to_time(Field field, const Model& model, const RunConfig& cfg, std::vector<double> snapshot_times,
                  const std::function<void(const Field&)>& on_snapshot, RunStats* stats) {
  const auto start = std::chrono::steady_clock::now();
  const SpatialOperator op(model, field.grid, cfg);
  const ButcherTableau tab = cfg.integrator();
  const int time_order = std::max(1, tab.order);
  snapshot_times.push_back(cfg.t_end);
  std::sort(snapshot_times.begin(), snapshot_times.end());
  snapshot_times.erase(std::unique(snapshot_times.begin(), snapshot_times.end()), snapshot_times.end());
  long steps = 0;
  for (double target : snapshot_times) {
    if (target < field.t) continue;
    while (field.t < target) {
      double dt = op.stable_dt(field.u, time_order);
      // land exactly on the target instead of leaving a sliver step
      if (field.t + dt >= target - 1e-12 * std::max(1.0, std::abs(target))) dt = target - field.t;
      rk_step(op, tab, field, dt);
      ++steps;
      if (target - field.t <= 1e-14 * std::max(1.0, std::abs(target))) field.t = target;
    }
    if (on_snapshot) on_snapshot(field);
  }
  if (stats) {
    stats->steps = steps;
    stats->rhs_evaluations = steps * tab.stages;
    stats->wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return field;
}

std::vector<double> semidiscrete_rhs(const Field& field, const Model& model, const RunConfig& cfg) {
  const SpatialOperator op(model, field.grid, cfg);
  std::vector<double> out(field.u.size());
  op.rhs(field.u, out);
  return out;
}

}  // namespace cweno

namespace cweno {

void set_thread_count(int n) {
  if (n < 1) throw std::invalid_argument("thread count must be positive");
#ifdef CWENO_HAVE_OPENMP
  omp_set_num_threads(n);
#endif
}

}  // namespace cweno
