#include "cweno/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace cweno {

std::string_view to_string(Boundary bc) {
  switch (bc) {
    case Boundary::periodic: return "periodic";
    case Boundary::outflow: return "outflow";
    case Boundary::reflective: return "reflective";
  }
  return "unknown";
}

Boundary parse_boundary(std::string_view name) {
  if (name == "periodic") return Boundary::periodic;
  if (name == "outflow" || name == "free") return Boundary::outflow;
  if (name == "reflective") return Boundary::reflective;
  throw std::invalid_argument("unknown boundary condition '" + std::string(name) + "'");
}

Grid1D::Grid1D(std::vector<double> edges, Boundary bc) : edges_(std::move(edges)), bc_(bc) {
  if (edges_.size() < 2) throw std::invalid_argument("grid needs at least one cell");
  const std::size_t n = edges_.size() - 1;
  sizes_.resize(n);
  centers_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double h = edges_[j + 1] - edges_[j];
    if (!std::isfinite(edges_[j]) || !std::isfinite(edges_[j + 1]) || !(h > 0.0)) {
      throw std::invalid_argument("grid edges must be finite and strictly increasing");
    }
    sizes_[j] = h;
    centers_[j] = 0.5 * (edges_[j] + edges_[j + 1]);
  }
  const auto [lo, hi] = std::minmax_element(sizes_.begin(), sizes_.end());
  min_size_ = *lo;
  max_size_ = *hi;
}

bool Grid1D::is_uniform(double rel_tol) const {
  const double mean = (b() - a()) / cells();
  return std::all_of(sizes_.begin(), sizes_.end(),
                     [&](double h) { return std::abs(h - mean) <= rel_tol * mean; });
}

int Grid1D::source_cell(int j, bool* mirrored) const {
  const int n = cells();
  if (mirrored) *mirrored = false;
  if (j >= 0 && j < n) return j;
  if (bc_ == Boundary::periodic) return ((j % n) + n) % n;
  if (bc_ == Boundary::reflective && mirrored) *mirrored = true;
  if (bc_ == Boundary::outflow) return j < 0 ? 0 : n - 1;
  // mirror image across the nearest domain end
  int k = j < 0 ? -1 - j : 2 * n - 1 - j;
  return std::clamp(k, 0, n - 1);
}

double Grid1D::padded_size(int j) const {
  const int n = cells();
  if (j >= 0 && j < n) return size(j);
  if (bc_ == Boundary::periodic) return size(((j % n) + n) % n);
  const int k = j < 0 ? -1 - j : 2 * n - 1 - j;
  return size(std::clamp(k, 0, n - 1));
}

Grid1D make_uniform(double a, double b, int n, Boundary bc) {
  if (n < 1) throw std::invalid_argument("make_uniform: N must be at least 1");
  if (!(a < b)) throw std::invalid_argument("make_uniform: require a < b");
  std::vector<double> edges(static_cast<std::size_t>(n) + 1);
  const double h = (b - a) / n;
  for (int j = 0; j <= n; ++j) edges[static_cast<std::size_t>(j)] = a + j * h;
  edges.back() = b;
  return Grid1D(std::move(edges), bc);
}

Grid1D make_random_nonuniform(double a, double b, int n, std::uint64_t seed, double ratio_max,
                              Boundary bc) {
  if (!(ratio_max >= 1.0)) throw std::invalid_argument("make_random_nonuniform: ratio_max < 1");
  if (ratio_max == 1.0) return make_uniform(a, b, n, bc);
  if (n < 1) throw std::invalid_argument("make_random_nonuniform: N must be at least 1");
  if (!(a < b)) throw std::invalid_argument("make_random_nonuniform: require a < b");

  // sizes 1 + theta*U with U in [-1, 1): extreme ratio (1+theta)/(1-theta) < ratio_max
  const double theta = (ratio_max - 1.0) / (ratio_max + 1.0) * (1.0 - 1e-9);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> raw(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& s : raw) {
    s = 1.0 + theta * unit(rng);
    total += s;
  }
  std::vector<double> edges(static_cast<std::size_t>(n) + 1);
  edges[0] = a;
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    acc += raw[static_cast<std::size_t>(j)];
    edges[static_cast<std::size_t>(j) + 1] = a + (b - a) * (acc / total);
  }
  edges.back() = b;
  return Grid1D(std::move(edges), bc);
}

void GhostPad::fill(const Grid1D& grid, int m, std::span<const double> interior,
                    std::span<double> padded, std::span<const bool> odd) const {
  const int n = grid.cells();
  if (interior.size() != static_cast<std::size_t>(n * m) ||
      padded.size() != static_cast<std::size_t>((n + 2 * width) * m)) {
    throw std::invalid_argument("GhostPad::fill: buffer size mismatch");
  }
  for (int j = -width; j < n + width; ++j) {
    bool mirrored = false;
    const int src = grid.source_cell(j, &mirrored);
    for (int c = 0; c < m; ++c) {
      double v = interior[static_cast<std::size_t>(src * m + c)];
      if (mirrored && !odd.empty() && odd[static_cast<std::size_t>(c)]) v = -v;
      padded[static_cast<std::size_t>((j + width) * m + c)] = v;
    }
  }
}

}  // namespace cweno
