#pragma once

#include "cweno/poly.hpp"

namespace cweno {

/// Jiang-Shu regularity indicator of p on the cell of width `width` centered at
/// p.center(): sum over l >= 1 of width^(2l-1) * integral of (d^l p / dx^l)^2.
/// Evaluated in closed form from the monomial coefficients; always >= 0.
double jiang_shu(const Poly& p, double width);

/// Overload taking the cell end points; p must be centered on the cell.
double jiang_shu(const Poly& p, double left, double right);

}  // namespace cweno
