#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cweno {

enum class Boundary { periodic, outflow, reflective };

std::string_view to_string(Boundary bc);
Boundary parse_boundary(std::string_view name);

/// Partition of [a, b] into N cells. Immutable after construction.
class Grid1D {
 public:
  /// Validates that edges are finite and strictly increasing.
  Grid1D(std::vector<double> edges, Boundary bc);

  int cells() const { return static_cast<int>(sizes_.size()); }
  double a() const { return edges_.front(); }
  double b() const { return edges_.back(); }
  Boundary boundary() const { return bc_; }

  std::span<const double> edges() const { return edges_; }
  std::span<const double> sizes() const { return sizes_; }
  std::span<const double> centers() const { return centers_; }

  double size(int j) const { return sizes_[static_cast<std::size_t>(j)]; }
  double center(int j) const { return centers_[static_cast<std::size_t>(j)]; }
  double left(int j) const { return edges_[static_cast<std::size_t>(j)]; }
  double right(int j) const { return edges_[static_cast<std::size_t>(j) + 1]; }
  double min_size() const { return min_size_; }
  double max_size() const { return max_size_; }

  /// True when every cell size matches the mean to `rel_tol`.
  bool is_uniform(double rel_tol = 1e-12) const;

  /// Size of cell j for j outside [0, N): periodic cells wrap, other boundaries mirror.
  double padded_size(int j) const;

  /// Interior cell feeding ghost index j; `mirrored` is set for reflective fills.
  int source_cell(int j, bool* mirrored = nullptr) const;

 private:
  std::vector<double> edges_;
  std::vector<double> sizes_;
  std::vector<double> centers_;
  double min_size_ = 0.0;
  double max_size_ = 0.0;
  Boundary bc_;
};

Grid1D make_uniform(double a, double b, int n, Boundary bc);

/// Edges of a uniform grid perturbed by a seeded uniform variate and rescaled to
/// [a, b]; the ratio of extreme cell sizes never exceeds `ratio_max`.
Grid1D make_random_nonuniform(double a, double b, int n, std::uint64_t seed,
                              double ratio_max, Boundary bc);

/// Ghost layer description for an m-component field stored cell-major.
struct GhostPad {
  int width = 0;

  /// Fills `padded` (size (N + 2 width) * m) from `interior` (size N * m).
  /// `odd` marks components that change sign under reflection.
  void fill(const Grid1D& grid, int m, std::span<const double> interior,
            std::span<double> padded, std::span<const bool> odd = {}) const;
};

}  // namespace cweno
