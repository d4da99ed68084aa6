#include "cweno/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cweno {

Poly::Poly(double center, double scale, std::span<const double> coeffs)
    : center_(center), scale_(scale) {
  if (coeffs.empty() || coeffs.size() > static_cast<std::size_t>(kMaxCoeffs)) {
    throw std::invalid_argument("Poly: degree must be in [0, " + std::to_string(kMaxDegree) + "]");
  }
  if (!(scale > 0.0)) throw std::invalid_argument("Poly: scale must be positive");
  degree_ = static_cast<int>(coeffs.size()) - 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = coeffs[i];
}

Poly Poly::constant(double value, double center, double scale) {
  const double c[1] = {value};
  return Poly(center, scale, c);
}

Poly Poly::zero(int degree, double center, double scale) {
  Poly p = constant(0.0, center, scale);
  p.widen(degree);
  return p;
}

double Poly::operator()(double x) const {
  const double xi = (x - center_) / scale_;
  double v = c_[static_cast<std::size_t>(degree_)];
  for (int i = degree_ - 1; i >= 0; --i) v = v * xi + c_[static_cast<std::size_t>(i)];
  return v;
}

Poly Poly::derivative() const {
  Poly d;
  d.center_ = center_;
  d.scale_ = scale_;
  d.degree_ = degree_ > 0 ? degree_ - 1 : 0;
  for (int i = 1; i <= degree_; ++i) {
    d.c_[static_cast<std::size_t>(i - 1)] = i * c_[static_cast<std::size_t>(i)] / scale_;
  }
  return d;
}

Poly Poly::rescaled(double new_scale) const {
  if (!(new_scale > 0.0)) throw std::invalid_argument("Poly::rescaled: scale must be positive");
  Poly p = *this;
  const double ratio = new_scale / scale_;
  double f = 1.0;
  for (int i = 0; i <= degree_; ++i) {
    p.c_[static_cast<std::size_t>(i)] *= f;
    f *= ratio;
  }
  p.scale_ = new_scale;
  return p;
}

void Poly::widen(int degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("Poly::widen: degree too large");
  if (degree > degree_) degree_ = degree;
}

void Poly::check_compatible(const Poly& other) const {
  if (other.center_ != center_ || other.scale_ != scale_) {
    throw std::invalid_argument("Poly: operands use different local coordinates");
  }
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  widen(other.degree_);
  for (int i = 0; i <= other.degree_; ++i) c_[static_cast<std::size_t>(i)] += other.c_[static_cast<std::size_t>(i)];
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  widen(other.degree_);
  for (int i = 0; i <= other.degree_; ++i) c_[static_cast<std::size_t>(i)] -= other.c_[static_cast<std::size_t>(i)];
  return *this;
}

Poly& Poly::operator*=(double s) {
  for (int i = 0; i <= degree_; ++i) c_[static_cast<std::size_t>(i)] *= s;
  return *this;
}

double eval(const Poly& p, double x) { return p(x); }

double cell_average(const Poly& p, double left, double right) {
  if (!(right > left)) throw std::invalid_argument("cell_average: empty interval");
  const double xl = (left - p.center()) / p.scale();
  const double xr = (right - p.center()) / p.scale();
  // Horner on the antiderivative sum a_i xi^{i+1} / (i+1)
  double vl = 0.0;
  double vr = 0.0;
  for (int i = p.degree(); i >= 0; --i) {
    const double a = p.coeff(i) / (i + 1);
    vl = (vl + a) * xl;
    vr = (vr + a) * xr;
  }
  return p.scale() * (vr - vl) / (right - left);
}

DiffTable::DiffTable(int base, int depth, DiffMode mode)
    : base_(base), depth_(depth), mode_(mode) {
  if (depth < 1) throw std::invalid_argument("DiffTable: depth must be positive");
  data_.assign(static_cast<std::size_t>(depth * (depth + 1) / 2), 0.0);
}

std::size_t DiffTable::index(int j, int p) const {
  if (!contains(j, p)) {
    throw std::out_of_range("DiffTable: entry (" + std::to_string(j) + ", " + std::to_string(p) +
                            ") outside table");
  }
  // order p holds depth - p + 1 entries; orders before it hold sum_{q<p} (depth - q + 1)
  const int before = (p - 1) * depth_ - (p - 1) * (p - 2) / 2;
  return static_cast<std::size_t>(before + (j - base_));
}

DiffTable build_diff_table(std::span<const double> averages, std::span<const double> sizes,
                           DiffMode mode, int base) {
  if (averages.empty()) throw std::invalid_argument("build_diff_table: no averages");
  const bool divided = mode == DiffMode::divided;
  if (divided || !sizes.empty()) {
    if (sizes.size() != averages.size()) {
      throw std::invalid_argument("build_diff_table: averages and sizes differ in length");
    }
  }
  if (divided) {
    for (double h : sizes) {
      if (!(h > 0.0)) throw std::invalid_argument("build_diff_table: sizes must be positive");
    }
  }
  const int n = static_cast<int>(averages.size());
  DiffTable table(base, n, mode);
  for (int j = 0; j < n; ++j) table.at(base + j, 1) = averages[static_cast<std::size_t>(j)];
  for (int p = 2; p <= n; ++p) {
    for (int j = 0; j + p - 1 < n; ++j) {
      double span = 0.0;
      if (divided) {
        for (int i = j; i <= j + p - 1; ++i) span += sizes[static_cast<std::size_t>(i)];
      } else {
        span = p;
      }
      table.at(base + j, p) = (table(base + j + 1, p - 1) - table(base + j, p - 1)) / span;
    }
  }
  return table;
}

double edge_position(const StencilGeometry& geometry, int n) {
  const double h0 = geometry.size(0);
  if (n <= 0) {
    double x = -0.5 * h0;
    for (int i = n; i <= -1; ++i) x -= geometry.size(i);
    return x;
  }
  double x = 0.5 * h0;
  for (int i = 1; i <= n - 1; ++i) x += geometry.size(i);
  return x;
}

namespace {

void require_nodes(int r, int count, const StencilGeometry& geometry) {
  // nodes x_{n-1/2} for n = -r .. -r+count-1 touch cells min(-r,0) .. max(-r+count-2,0)
  const int lo = std::min(-r, 0);
  const int hi = std::max(-r + count - 2, 0);
  if (!geometry.covers(lo, hi)) {
    throw std::invalid_argument("stencil geometry does not cover offsets " + std::to_string(lo) +
                                ".." + std::to_string(hi));
  }
}

}  // namespace

double gamma_nonuniform(int r, int i, int m, const StencilGeometry& geometry) {
  if (m > i || m < 0) return 0.0;
  require_nodes(r, i, geometry);
  std::array<double, 64> c{};
  if (i >= static_cast<int>(c.size())) throw std::invalid_argument("gamma_nonuniform: i too large");
  c[0] = 1.0;
  for (int l = 0; l < i; ++l) {
    const double node = edge_position(geometry, l - r);
    for (int q = l + 1; q > 0; --q) c[static_cast<std::size_t>(q)] = c[static_cast<std::size_t>(q - 1)] - node * c[static_cast<std::size_t>(q)];
    c[0] = -node * c[0];
  }
  return c[static_cast<std::size_t>(m)];
}

GammaTable GammaTable::from_nodes(int r, std::span<const double> nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n < 1 || n > kMaxSize) throw std::invalid_argument("GammaTable: unsupported size");
  GammaTable t;
  t.r_ = r;
  t.n_ = n;
  // running product prod_{l<i} (x - node_l); row i holds its x^m coefficients times m
  std::array<double, kMaxSize + 1> c{};
  c[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const double node = nodes[static_cast<std::size_t>(i - 1)];
    for (int q = i; q > 0; --q) c[static_cast<std::size_t>(q)] = c[static_cast<std::size_t>(q - 1)] - node * c[static_cast<std::size_t>(q)];
    c[0] = -node * c[0];
    for (int m = 1; m <= i; ++m) {
      t.g_[static_cast<std::size_t>((i - 1) * kMaxSize + (m - 1))] = m * c[static_cast<std::size_t>(m)];
    }
  }
  return t;
}

GammaTable GammaTable::uniform(int r, int size) {
  std::array<double, kMaxSize> nodes{};
  if (size < 1 || size > kMaxSize) throw std::invalid_argument("GammaTable: unsupported size");
  for (int l = 0; l < size; ++l) nodes[static_cast<std::size_t>(l)] = l - r - 0.5;
  return from_nodes(r, std::span<const double>(nodes.data(), static_cast<std::size_t>(size)));
}

GammaTable GammaTable::from_geometry(int r, int size, const StencilGeometry& geometry) {
  if (size < 1 || size > kMaxSize) throw std::invalid_argument("GammaTable: unsupported size");
  require_nodes(r, size, geometry);
  std::array<double, kMaxSize> nodes{};
  for (int l = 0; l < size; ++l) nodes[static_cast<std::size_t>(l)] = edge_position(geometry, l - r);
  return from_nodes(r, std::span<const double>(nodes.data(), static_cast<std::size_t>(size)));
}

Poly interpolant(int k, int r, const DiffTable& diffs, const GammaTable& gamma, double center,
                 double scale) {
  if (k < 0 || k > kMaxDegree) throw std::invalid_argument("interpolant: degree out of range");
  if (!diffs.contains(-r, k + 1)) {
    throw std::invalid_argument("interpolant: stencil exceeds difference table");
  }
  if (gamma.offset() != r || gamma.size() < k + 1) {
    throw std::invalid_argument("interpolant: gamma table does not match stencil");
  }
  Poly p = Poly::zero(k, center, scale);
  for (int i = 1; i <= k + 1; ++i) {
    const double delta = diffs(-r, i);
    for (int m = 1; m <= i; ++m) p.coeff(m - 1) += delta * gamma(i, m);
  }
  return p;
}

Poly interpolant(int k, int r, const DiffTable& diffs, const StencilGeometry& geometry) {
  if (k < 0 || k > kMaxDegree) throw std::invalid_argument("interpolant: degree out of range");
  if (!diffs.contains(-r, k + 1)) {
    throw std::invalid_argument("interpolant: stencil exceeds difference table");
  }
  if (diffs.mode() == DiffMode::undivided) {
    return interpolant(k, r, diffs, GammaTable::uniform(r, k + 1), geometry.center,
                       geometry.size(0));
  }
  return interpolant(k, r, diffs, GammaTable::from_geometry(r, k + 1, geometry), geometry.center,
                     1.0);
}

}  // namespace cweno
