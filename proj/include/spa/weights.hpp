#pragma once

// Weight functions phi^alpha, delta_n^alpha and custom weights, with the
// grid-based weighted sup-norm of residuals. phi vanishes at +-1, so
// phi-weighted (interpolatory) norms drop the endpoints from their grids and
// force endpoint interpolation in the solvers.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "spa/chebyshev.hpp"
#include "spa/test_function.hpp"

namespace spa {

inline double phi(double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); }
inline double delta_n(double x, int n) { return phi(x) + 1.0 / n; }
inline double rho_n(double x, int n) { return delta_n(x, n) / n; }

enum class WeightKind { Unweighted, PhiAlpha, DeltaAlpha, Custom };

struct WeightSpec {
  WeightKind kind = WeightKind::Unweighted;
  double alpha = 0.0;
  int n_param = 0;  // the n in delta_n; required for DeltaAlpha
  std::function<double(double)> custom_weight;
  bool interpolate_left = false;
  bool interpolate_right = false;

  static WeightSpec unweighted() { return WeightSpec{}; }

  static WeightSpec phi_alpha(double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("WeightSpec: alpha must be >= 0");
    WeightSpec w;
    w.kind = WeightKind::PhiAlpha;
    w.alpha = alpha;
    // Finiteness of the phi^alpha norm requires interpolation at +-1.
    w.interpolate_left = w.interpolate_right = alpha > 0.0;
    return w;
  }

  static WeightSpec delta_alpha(double alpha, int n) {
    if (alpha < 0.0) throw std::invalid_argument("WeightSpec: alpha must be >= 0");
    if (n < 1) throw std::invalid_argument("WeightSpec: delta weight needs n >= 1");
    WeightSpec w;
    w.kind = WeightKind::DeltaAlpha;
    w.alpha = alpha;
    w.n_param = n;
    return w;
  }

  static WeightSpec custom(std::function<double(double)> fn, double alpha_hint) {
    WeightSpec w;
    w.kind = WeightKind::Custom;
    w.custom_weight = std::move(fn);
    w.alpha = alpha_hint;
    w.interpolate_left = w.interpolate_right = alpha_hint > 0.0;
    return w;
  }
};

inline double weight_value(const WeightSpec& spec, double x) {
  if (std::abs(x) > 1.0 + 1e-12)
    throw std::domain_error("weight_value: x outside [-1,1]");
  switch (spec.kind) {
    case WeightKind::Unweighted:
      return 1.0;
    case WeightKind::PhiAlpha:
      return spec.alpha == 0.0 ? 1.0 : std::pow(phi(x), spec.alpha);
    case WeightKind::DeltaAlpha:
      if (spec.n_param < 1)
        throw std::invalid_argument("weight_value: delta weight without n");
      return spec.alpha == 0.0 ? 1.0 : std::pow(delta_n(x, spec.n_param), spec.alpha);
    case WeightKind::Custom:
      return spec.custom_weight(x);
  }
  return 1.0;
}

// Weights at or below the numerical floor count as vanished: rows built on
// them carry no information once interpolation pins the endpoint.
inline bool weight_vanishes_at(const WeightSpec& spec, double x) {
  return weight_value(spec, x) <= 1e-13;
}

// Default norm grid: Lobatto with m = 32 * degree_bound subdivisions,
// endpoints dropped wherever the weight vanishes. Chebyshev clustering is
// what resolves the singular endpoint behavior of the phi weights.
inline Grid default_norm_grid(int degree_bound, const WeightSpec& spec) {
  int m = 32 * std::max(1, degree_bound);
  Grid g = cheb_grid(m);
  bool drop_left = weight_vanishes_at(spec, -1.0);
  bool drop_right = weight_vanishes_at(spec, 1.0);
  if (drop_left) g.nodes.erase(g.nodes.begin());
  if (drop_right) g.nodes.pop_back();
  g.includes_endpoints = !(drop_left || drop_right);
  return g;
}

struct WeightedNormReport {
  double value = 0.0;
  double arg_max = 0.0;  // node achieving the max
  // Quotient at the outermost node divided by the quotient at its neighbor;
  // ratios persistently above ~1.5 suggest the continuous supremum diverges
  // toward that endpoint.
  double trend_left = 1.0;
  double trend_right = 1.0;
};

inline WeightedNormReport weighted_residual_norm(const TestFunction& f,
                                                 const ChebPoly& p,
                                                 const WeightSpec& spec,
                                                 const Grid& grid) {
  if (grid.nodes.size() < 2)
    throw std::invalid_argument("weighted_residual_norm: need at least 2 nodes");
  WeightedNormReport rep;
  std::vector<double> quotient(grid.nodes.size());
  for (size_t i = 0; i < grid.nodes.size(); ++i) {
    double x = grid.nodes[i];
    double w = weight_value(spec, x);
    if (w <= 0.0)
      throw std::invalid_argument("weighted_residual_norm: weight vanishes at grid node");
    quotient[i] = std::abs(f(x) - clenshaw_eval(p, x)) / w;
    if (quotient[i] > rep.value) {
      rep.value = quotient[i];
      rep.arg_max = x;
    }
  }
  auto ratio = [](double outer, double inner) {
    if (inner < 1e-300) return outer < 1e-300 ? 1.0 : std::numeric_limits<double>::infinity();
    return outer / inner;
  };
  rep.trend_left = ratio(quotient.front(), quotient[1]);
  rep.trend_right = ratio(quotient.back(), quotient[quotient.size() - 2]);
  return rep;
}

}  // namespace spa
