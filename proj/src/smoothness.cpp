#include "cweno/smoothness.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace cweno {

namespace {

constexpr double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

constexpr double pow2(int e) {
  double v = 1.0;
  if (e >= 0) {
    for (int i = 0; i < e; ++i) v *= 2.0;
  } else {
    for (int i = 0; i < -e; ++i) v *= 0.5;
  }
  return v;
}

// weight[j][i], j <= i, i + j even: coefficient of a_j a_i h^(j+i) summed over
// derivative orders l = 1 .. j
using WeightMatrix = std::array<std::array<double, kMaxCoeffs>, kMaxCoeffs>;

constexpr WeightMatrix make_weights() {
  WeightMatrix w{};
  for (int j = 1; j <= kMaxDegree; ++j) {
    for (int i = j; i <= kMaxDegree; i += 2) {
      double s = 0.0;
      for (int l = 1; l <= j; ++l) {
        const double falling = factorial(j) * factorial(i) / (factorial(j - l) * factorial(i - l));
        const int delta = i == j ? 1 : 0;
        s += falling * pow2(2 * l + 1 - j - i - delta) / (j + i - 2 * l + 1);
      }
      w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s;
    }
  }
  return w;
}

constexpr WeightMatrix kWeights = make_weights();

}  // namespace

double jiang_shu(const Poly& p, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("jiang_shu: cell width must be positive");
  // a_i h^i in physical units equals c_i (h/scale)^i
  std::array<double, kMaxCoeffs> t{};
  const double ratio = width / p.scale();
  double f = ratio;
  for (int i = 1; i <= p.degree(); ++i) {
    t[static_cast<std::size_t>(i)] = p.coeff(i) * f;
    f *= ratio;
  }
  double sum = 0.0;
  for (int j = 1; j <= p.degree(); ++j) {
    for (int i = j; i <= p.degree(); i += 2) {
      sum += kWeights[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
             t[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(i)];
    }
  }
  // positive semi-definite form; clip roundoff below zero
  return sum > 0.0 ? sum : 0.0;
}

double jiang_shu(const Poly& p, double left, double right) {
  const double width = right - left;
  const double mid = 0.5 * (left + right);
  if (!(width > 0.0)) throw std::invalid_argument("jiang_shu: empty cell");
  if (std::abs(mid - p.center()) > 1e-12 * (width + std::abs(mid))) {
    throw std::invalid_argument("jiang_shu: polynomial is not centered on the cell");
  }
  return jiang_shu(p, width);
}

}  // namespace cweno
