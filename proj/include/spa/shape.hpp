#pragma once

// Co-q-monotonicity: sign patterns induced by a change collection and the
// grid check sigma(x) * P^(q)(x) >= 0 for Chebyshev polynomials.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spa/chebyshev.hpp"

namespace spa {

struct ShapeConstraint {
  int q = 1;
  // Change points, strictly decreasing, all inside (-1,1). Empty means the
  // fully constrained (s = 0) case.
  std::vector<double> change_points;

  ShapeConstraint() = default;
  ShapeConstraint(int order, std::vector<double> ys)
      : q(order), change_points(std::move(ys)) {
    if (q < 1) throw std::invalid_argument("ShapeConstraint: q must be >= 1");
    for (size_t i = 0; i < change_points.size(); ++i) {
      if (std::abs(change_points[i]) >= 1.0)
        throw std::invalid_argument("ShapeConstraint: change point outside (-1,1)");
      if (i > 0 && change_points[i] >= change_points[i - 1])
        throw std::invalid_argument("ShapeConstraint: change points must strictly decrease");
    }
  }

  int s() const { return static_cast<int>(change_points.size()); }
};

// +1 when an even number of change points lie strictly above x (so +1 on the
// rightmost interval). Exact ties break toward +1.
inline int sign_pattern(const ShapeConstraint& c, double x) {
  if (std::abs(x) > 1.0 + 1e-12)
    throw std::domain_error("sign_pattern: x outside [-1,1]");
  int above = 0;
  for (double y : c.change_points)
    if (y > x) ++above;
  return (above % 2 == 0) ? +1 : -1;
}

struct ShapeReport {
  bool feasible = false;
  double min_signed_value = 0.0;  // min over the grid of sigma(x) * p^(q)(x)
  double witness = 0.0;           // location of the minimum
};

// Evaluates sigma(x) * p^(q)(x) on a Lobatto grid of grid_size nodes plus the
// midpoints between consecutive sign breakpoints; feasible iff the minimum
// stays above -shape_tol.
inline ShapeReport is_co_q_monotone(const ChebPoly& p, const ShapeConstraint& c,
                                    int grid_size, double shape_tol) {
  if (grid_size < 2) grid_size = 2;
  ChebPoly dq = derivative(p, c.q);

  std::vector<double> pts = cheb_grid(grid_size - 1).nodes;
  std::vector<double> breakpoints{-1.0};
  for (size_t i = c.change_points.size(); i-- > 0;)
    breakpoints.push_back(c.change_points[i]);
  breakpoints.push_back(1.0);
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
    pts.push_back(0.5 * (breakpoints[i] + breakpoints[i + 1]));

  ShapeReport rep;
  rep.min_signed_value = std::numeric_limits<double>::infinity();
  for (double x : pts) {
    // Skip exact change points: p^(q) may legitimately vanish there and the
    // sign is ambiguous.
    bool at_change = false;
    for (double y : c.change_points)
      if (x == y) at_change = true;
    if (at_change) continue;
    double v = sign_pattern(c, x) * clenshaw_eval(dq, x);
    if (v < rep.min_signed_value) {
      rep.min_signed_value = v;
      rep.witness = x;
    }
  }
  rep.feasible = rep.min_signed_value >= -shape_tol;
  return rep;
}

}  // namespace spa
