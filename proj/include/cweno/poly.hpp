#pragma once

// Newton-form interpolation of cell averages and conversion to monomial form.
//
// A degree-k polynomial interpolating the averages at offsets -r .. -r+k around a
// reference cell is the derivative of the Newton interpolant of the running sums
// of h_l * u_l at the cell edges. Writing that primitive in the monomial basis
// gives weights gamma_{r,i,m}; the reconstruction itself uses Gamma = m * gamma.

#include <array>
#include <span>
#include <vector>

namespace cweno {

inline constexpr int kMaxDegree = 8;
inline constexpr int kMaxCoeffs = kMaxDegree + 1;

/// Polynomial in the monomial basis of xi = (x - center) / scale.
class Poly {
 public:
  Poly() = default;
  Poly(double center, double scale, std::span<const double> coeffs);

  static Poly constant(double value, double center = 0.0, double scale = 1.0);
  static Poly zero(int degree, double center = 0.0, double scale = 1.0);

  int degree() const { return degree_; }
  double center() const { return center_; }
  double scale() const { return scale_; }
  std::span<const double> coeffs() const { return {c_.data(), static_cast<std::size_t>(degree_ + 1)}; }
  double coeff(int i) const { return i <= degree_ ? c_[static_cast<std::size_t>(i)] : 0.0; }
  double& coeff(int i) { return c_[static_cast<std::size_t>(i)]; }

  /// Horner evaluation at physical x.
  double operator()(double x) const;
  /// Evaluation at the local coordinate xi = (x - center) / scale.
  double local(double xi) const {
    double v = c_[static_cast<std::size_t>(degree_)];
    for (int i = degree_ - 1; i >= 0; --i) v = v * xi + c_[static_cast<std::size_t>(i)];
    return v;
  }

  /// d/dx in physical units, same center and scale.
  Poly derivative() const;

  /// Same function expressed in (x - center) / new_scale.
  Poly rescaled(double new_scale) const;

  /// Raise the stored degree (padding with zeros); never lowers it.
  void widen(int degree);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(double s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(double s, Poly a) { return a *= s; }

 private:
  void check_compatible(const Poly& other) const;

  double center_ = 0.0;
  double scale_ = 1.0;
  int degree_ = 0;
  std::array<double, kMaxCoeffs> c_{};
};

double eval(const Poly& p, double x);

/// Exact mean of p over [left, right].
double cell_average(const Poly& p, double left, double right);

enum class DiffMode { divided, undivided };

/// Triangular table of divided (or undivided) differences of cell averages.
/// Entry (j, p) uses the averages at offsets j .. j+p-1; offsets start at base().
class DiffTable {
 public:
  DiffTable(int base, int depth, DiffMode mode);

  int base() const { return base_; }
  int depth() const { return depth_; }
  int last() const { return base_ + depth_ - 1; }
  DiffMode mode() const { return mode_; }

  bool contains(int j, int p) const { return p >= 1 && j >= base_ && j + p - 1 <= last(); }
  double operator()(int j, int p) const { return data_[index(j, p)]; }
  double& at(int j, int p) { return data_[index(j, p)]; }

 private:
  std::size_t index(int j, int p) const;

  int base_;
  int depth_;
  DiffMode mode_;
  std::vector<double> data_;
};

/// `sizes` may be empty in undivided mode.
DiffTable build_diff_table(std::span<const double> averages, std::span<const double> sizes,
                           DiffMode mode, int base = 0);

/// Coefficient of x^m in prod_{l=0}^{i-1} (x - (l - r - 1/2)); zero when m > i.
constexpr double gamma_uniform(int r, int i, int m) {
  if (m > i || m < 0 || i < 0) return 0.0;
  std::array<double, 32> c{};
  c[0] = 1.0;
  for (int l = 0; l < i; ++l) {
    const double node = l - r - 0.5;
    for (int q = l + 1; q > 0; --q) c[static_cast<std::size_t>(q)] = c[static_cast<std::size_t>(q - 1)] - node * c[static_cast<std::size_t>(q)];
    c[0] = -node * c[0];
  }
  return c[static_cast<std::size_t>(m)];
}

/// Table entry Gamma_{r,i,m} = m * gamma_{r,i,m}.
constexpr double big_gamma_uniform(int r, int i, int m) { return m * gamma_uniform(r, i, m); }

/// Sizes of the cells around a reference cell, by offset. The reference cell
/// center is the origin of the interpolants' local coordinate.
struct StencilGeometry {
  std::span<const double> sizes;  // sizes[k] is the cell at offset first + k
  int first = 0;
  double center = 0.0;

  double size(int offset) const { return sizes[static_cast<std::size_t>(offset - first)]; }
  bool covers(int lo, int hi) const {
    return lo >= first && hi <= first + static_cast<int>(sizes.size()) - 1;
  }
};

/// Left edge of the cell at offset n, measured from the reference cell center.
double edge_position(const StencilGeometry& geometry, int n);

/// Nonuniform weight gamma~_{r,i,m} from the neighbouring cell sizes.
double gamma_nonuniform(int r, int i, int m, const StencilGeometry& geometry);

/// Gamma~_{r,i,m} = m * gamma~_{r,i,m} for 1 <= m <= i <= size(). Entries do not
/// depend on the interpolant degree, so one table serves all degrees < size().
class GammaTable {
 public:
  static constexpr int kMaxSize = kMaxCoeffs;

  GammaTable() = default;
  static GammaTable uniform(int r, int size);
  /// nodes[l] = x_{l-r-1/2} for l = 0 .. size-1.
  static GammaTable from_nodes(int r, std::span<const double> nodes);
  static GammaTable from_geometry(int r, int size, const StencilGeometry& geometry);

  int offset() const { return r_; }
  int size() const { return n_; }
  double operator()(int i, int m) const {
    return m > i ? 0.0 : g_[static_cast<std::size_t>((i - 1) * kMaxSize + (m - 1))];
  }

 private:
  int r_ = 0;
  int n_ = 0;
  std::array<double, kMaxSize * kMaxSize> g_{};
};

/// Degree-k interpolant of the averages at offsets -r .. -r+k. Undivided tables
/// give a polynomial in x/h0 (uniform grid); divided tables give one in physical x.
Poly interpolant(int k, int r, const DiffTable& diffs, const StencilGeometry& geometry);

/// Same, with a precomputed table; the result is in (x - center) / scale.
Poly interpolant(int k, int r, const DiffTable& diffs, const GammaTable& gamma, double center,
                 double scale);

}  // namespace cweno
