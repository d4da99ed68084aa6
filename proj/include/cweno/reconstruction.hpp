#pragma once

// Central WENO reconstruction: one polynomial of degree 2g per cell, blending
// the optimal degree-2g interpolant with g+1 degree-g candidates through the
// extra polynomial P_0 = (P_opt - sum d_k P_k) / d_0. Also a classical WENO
// point reconstruction at cell boundaries for comparison runs.

#include <array>
#include <span>
#include <vector>

#include "cweno/poly.hpp"

namespace cweno {

inline constexpr int kMaxHalfDegree = 4;
inline constexpr int kMaxCandidates = kMaxHalfDegree + 2;

struct CwenoConfig {
  int g = 2;                // order 2g + 1
  double d0 = 0.75;
  std::vector<double> d;    // d_0 .. d_{g+1}; filled by for_order
  double eps_hat = 1.0;
  int eps_power = 2;        // epsilon = eps_hat * h^eps_power
  int t = 2;

  static CwenoConfig for_order(int order, double d0 = 0.75, double eps_hat = 1.0,
                               int eps_power = 2, int t = 2);

  int order() const { return 2 * g + 1; }
  int candidates() const { return g + 2; }
  double epsilon(double h) const;
  /// Throws std::invalid_argument when the coefficients or parameters are inconsistent.
  void validate() const;
};

/// d_0 followed by the center-biased profile d_j proportional to min(j, g+2-j).
std::vector<double> linear_coefficients(int g, double d0);

struct CwenoResult {
  Poly rec;
  std::vector<double> omegas;      // index 0 is P_0, k = 1..g+1 the degree-g candidates
  std::vector<double> indicators;  // same indexing
  Poly optimal;
  Poly p0;
  double optimal_indicator = 0.0;
};

/// Per-stencil Gamma tables: one for P_opt (offset g) and one per degree-g candidate.
struct StencilGammas {
  GammaTable optimal;
  std::array<GammaTable, kMaxHalfDegree + 1> low;  // low[r], r = 0..g

  static StencilGammas uniform(int g);
  static StencilGammas from_geometry(int g, const StencilGeometry& geometry);
};

/// Reusable reconstruction operator for one configuration. Thread-safe: all
/// methods are const and allocation-free apart from the returned result.
class CwenoReconstructor {
 public:
  explicit CwenoReconstructor(CwenoConfig cfg);

  const CwenoConfig& config() const { return cfg_; }
  const StencilGammas& uniform_gammas() const { return uniform_; }

  /// Full diagnostics. `averages` holds the 2g+1 stencil values, center cell at index g.
  CwenoResult reconstruct(std::span<const double> averages, const StencilGeometry& geometry) const;

  /// Only P_rec, in the coordinate (x - center) / scale. For uniform grids pass
  /// uniform_gammas(), scale = width = h and undivided differences are used.
  Poly reconstruct_poly(std::span<const double> averages, std::span<const double> sizes,
                        const StencilGammas& gammas, double center, double scale,
                        double width) const;

 private:
  struct Work;
  void run(std::span<const double> averages, std::span<const double> sizes,
           const StencilGammas& gammas, double center, double scale, double width, Work& w,
           bool want_details) const;

  CwenoConfig cfg_;
  StencilGammas uniform_;
};

/// Convenience wrapper around CwenoReconstructor::reconstruct.
CwenoResult cweno_reconstruct(std::span<const double> averages, const StencilGeometry& geometry,
                              const CwenoConfig& cfg);

/// Optimal weights d_k(xi) of the classical WENO point value at xi = -1/2 or +1/2
/// (cell units). Candidate k = 1..g+1 uses offsets k-1-g .. k-1.
std::vector<double> weno_linear_weights(int g, double xi);

/// Classical WENO value at a boundary of the central cell of a uniform stencil.
/// Interior points have no usable optimal weights and raise std::domain_error.
double weno_reconstruct_point(std::span<const double> averages, double xi, int g, double eps,
                              int t);

}  // namespace cweno
