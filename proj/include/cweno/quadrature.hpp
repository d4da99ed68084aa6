#pragma once

#include <vector>

namespace cweno {

/// Gauss-Legendre rule on [-1/2, 1/2]; weights sum to one, so
/// sum_i w_i f(c + h x_i) is the mean of f over [c - h/2, c + h/2].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n);

/// Mean of f over [left, right] with an n-point rule.
template <class F>
double cell_mean(F&& f, double left, double right, const QuadratureRule& rule) {
  const double c = 0.5 * (left + right);
  const double h = right - left;
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(c + h * rule.nodes[i]);
  return s;
}

}  // namespace cweno
