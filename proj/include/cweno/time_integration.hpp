#pragma once

#include <string>
#include <vector>

namespace cweno {

/// Explicit Runge-Kutta method: stage count s, strictly lower triangular A
/// (row-major s x s), weights b and nodes c.
struct ButcherTableau {
  std::string name;
  int stages = 0;
  int order = 0;  // nominal order
  std::vector<double> A;
  std::vector<double> b;
  std::vector<double> c;

  double a(int i, int j) const { return A[static_cast<std::size_t>(i * stages + j)]; }

  /// Throws std::invalid_argument unless sizes match, A is strictly lower
  /// triangular and sum(b) = 1.
  void validate() const;

  /// Largest k with b^T A^(j-1) 1 = 1/j! for all j <= k (order on linear problems).
  int linear_order(double tol = 1e-12) const;

  static ButcherTableau ssprk3();
  static ButcherTableau rk4();
  /// Six-stage fifth-order method of Butcher.
  static ButcherTableau rk5();
  /// Twelve-stage eighth-order method of Dormand and Prince.
  static ButcherTableau dp8();
  /// Polynomial extrapolation of explicit Euler with the harmonic step sequence
  /// 1, 2, ..., q: order q with q(q-1)/2 + 1 stages.
  static ButcherTableau extrapolated_euler(int q);

  /// Plain-text file: stage count, then the s rows of A, then b, then c.
  static ButcherTableau load(const std::string& path);
  static ButcherTableau parse(const std::string& text, const std::string& name = "file");
};

/// ssprk3, rk4, rk5, dp8, extrap:<q> or a path to a tableau file.
ButcherTableau tableau_by_name(const std::string& spec);

/// Integrator used when none is requested, chosen so the temporal error stays
/// below the spatial one for the given scheme order.
ButcherTableau default_tableau(int spatial_order);

}  // namespace cweno
