#pragma once

// Best co-q-monotone approximation in weighted sup norms, as a cutting-plane
// LP over the semi-infinite shape constraint, plus a one-shot dense-grid
// oracle used by the tests.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spa/chebyshev.hpp"
#include "spa/lp.hpp"
#include "spa/remez.hpp"
#include "spa/shape.hpp"
#include "spa/test_function.hpp"
#include "spa/weights.hpp"

namespace spa {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Values T_0(x) .. T_{n-1}(x).
inline std::vector<double> cheb_basis_row(int n, double x) {
  std::vector<double> row(static_cast<size_t>(n));
  double t0 = 1.0, t1 = x;
  for (int k = 0; k < n; ++k) {
    if (k == 0)
      row[0] = 1.0;
    else if (k == 1)
      row[1] = x;
    else {
      double t2 = 2.0 * x * t1 - t0;
      row[static_cast<size_t>(k)] = t2;
      t0 = t1;
      t1 = t2;
    }
  }
  return row;
}

// Coefficients of (T_k)^(q) for k = 0..n-1.
inline std::vector<ChebPoly> derivative_basis(int n, int q) {
  std::vector<ChebPoly> basis;
  basis.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<double> unit(static_cast<size_t>(k) + 1, 0.0);
    unit.back() = 1.0;
    basis.push_back(derivative(ChebPoly(std::move(unit)), q));
  }
  return basis;
}

// Shape-cut points: a Lobatto spread plus the midpoints between sign
// breakpoints, never the change points themselves.
inline std::vector<double> shape_cut_points(const ShapeConstraint& c, int subdivisions) {
  std::vector<double> pts = cheb_grid(subdivisions).nodes;
  std::vector<double> edges{-1.0};
  for (size_t i = c.change_points.size(); i-- > 0;) edges.push_back(c.change_points[i]);
  edges.push_back(1.0);
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    pts.push_back(0.5 * (edges[i] + edges[i + 1]));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto near_change = [&](double x) {
    for (double y : c.change_points)
      if (std::abs(x - y) < 1e-12) return true;
    return false;
  };
  pts.erase(std::remove_if(pts.begin(), pts.end(), near_change), pts.end());
  return pts;
}

struct MinimaxLp {
  int n;
  std::vector<LpRow> rows;
  std::vector<double> objective;

  explicit MinimaxLp(int n_) : n(n_), objective(static_cast<size_t>(n_) + 1, 0.0) {
    objective[static_cast<size_t>(n)] = 1.0;
  }

  void add_residual_rows(const TestFunction& f, const WeightSpec& spec,
                         const Grid& grid) {
    for (double x : grid.nodes) {
      double w = weight_value(spec, x);
      if (w <= 0.0)
        throw SolverError("norm grid contains a node with vanishing weight");
      double fx = f(x);
      std::vector<double> base = cheb_basis_row(n, x);
      base.push_back(w);
      rows.push_back({base, '>', fx});  // P(x) + t w >= f(x)
      for (double& v : base) v = -v;
      base[static_cast<size_t>(n)] = w;
      rows.push_back({std::move(base), '>', -fx});  // -P(x) + t w >= -f(x)
    }
  }

  void add_interpolation_rows(const TestFunction& f, const WeightSpec& spec) {
    for (double endpoint : {-1.0, 1.0}) {
      bool want = endpoint < 0 ? spec.interpolate_left : spec.interpolate_right;
      if (!want) continue;
      std::vector<double> row = cheb_basis_row(n, endpoint);
      row.push_back(0.0);
      rows.push_back({std::move(row), '=', f(endpoint)});
    }
  }

  void add_shape_row(const ShapeConstraint& c,
                     const std::vector<ChebPoly>& dq_basis, double u) {
    double sigma = sign_pattern(c, u);
    std::vector<double> row(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 0; k < n; ++k)
      row[static_cast<size_t>(k)] = sigma * clenshaw_eval(dq_basis[static_cast<size_t>(k)], u);
    rows.push_back({std::move(row), '>', 0.0});
  }

  LpResult solve() const {
    LpResult res = lp_solve(n + 1, objective, rows);
    if (res.status == LpStatus::Infeasible)
      throw SolverError("minimax LP infeasible (conflicting interpolation and shape constraints)");
    if (res.status == LpStatus::Unbounded)
      throw SolverError("minimax LP unbounded: internal error");
    if (res.status == LpStatus::IterationLimit)
      throw SolverError("minimax LP hit the pivot cap");
    if (res.max_violation > 1e-7)
      throw SolverError("minimax LP basis numerically singular (violation " +
                        std::to_string(res.max_violation) + ")");
    return res;
  }
};

inline ActiveSetReport extract_active_set(const TestFunction& f, const ChebPoly& p,
                                          const WeightSpec& spec, const Grid& grid,
                                          double t,
                                          const std::optional<ShapeConstraint>& c,
                                          const std::vector<double>& cut_points) {
  ActiveSetReport rep;
  for (double x : grid.nodes) {
    double w = weight_value(spec, x);
    if (std::abs(f(x) - clenshaw_eval(p, x)) >= t * w - 1e-9 * (1.0 + t))
      rep.residual_nodes.push_back(x);
  }
  if (c) {
    ChebPoly dq = derivative(p, c->q);
    double scale = 0.0;
    for (double u : cut_points) scale = std::max(scale, std::abs(clenshaw_eval(dq, u)));
    for (double u : cut_points)
      if (std::abs(clenshaw_eval(dq, u)) <= 1e-7 * (1.0 + scale))
        rep.shape_nodes.push_back(u);
  }
  return rep;
}

}  // namespace detail

// Best approximation out of P_n intersected with the co-q-monotone cone (when
// a constraint is given), in the weighted grid norm. The shape constraint is
// discretized and tightened by cutting planes until a x16 denser verification
// grid accepts the polynomial.
inline ApproxResult best_constrained(const TestFunction& f, int n,
                                     const std::optional<ShapeConstraint>& constraint,
                                     const WeightSpec& spec, double tol = 1e-9,
                                     const Grid* norm_grid_override = nullptr) {
  if (n < 1) throw std::invalid_argument("best_constrained: n must be >= 1");
  if (n > kMaxDegree)
    throw std::invalid_argument("best_constrained: degree cap exceeded");

  Grid grid = norm_grid_override ? *norm_grid_override : default_norm_grid(n, spec);

  detail::MinimaxLp lp(n);
  lp.add_residual_rows(f, spec, grid);
  lp.add_interpolation_rows(f, spec);

  ApproxResult res;
  res.tolerance = tol;

  // The shape constraint is vacuous when q >= n: every P in P_n has P^(q) = 0.
  bool shaped = constraint.has_value() && constraint->q < n;
  std::vector<double> cuts;
  std::vector<ChebPoly> dq_basis;
  int base_sub = std::max(64, 4 * n);
  if (shaped) {
    dq_basis = detail::derivative_basis(n, constraint->q);
    cuts = detail::shape_cut_points(*constraint, base_sub);
    for (double u : cuts) lp.add_shape_row(*constraint, dq_basis, u);
  }

  const int max_rounds = 200;
  double first_round_t = 0.0;
  std::vector<double> verify_pts;
  std::vector<double> enforce_limit;
  for (int round = 0;; ++round) {
    LpResult sol = lp.solve();
    if (round == 0) first_round_t = sol.objective;
    std::vector<double> coeffs(sol.x.begin(), sol.x.end() - 1);
    res.polynomial = ChebPoly(std::move(coeffs), n);
    res.error = sol.x.back();
    res.iterations = round + 1;

    if (!shaped) {
      res.converged = true;
      break;
    }
    ChebPoly dq = derivative(res.polynomial, constraint->q);
    int verify_sub = 16 * base_sub;
    if (verify_pts.empty()) {
      verify_pts = detail::shape_cut_points(*constraint, verify_sub);
      // A cut row at u is enforceable only down to the LP feasibility
      // tolerance times the row scale max_k |T_k^(q)(u)|; the acceptance
      // tolerance has to grant that slack or endpoint cuts recur forever.
      enforce_limit.resize(verify_pts.size());
      for (size_t i = 0; i < verify_pts.size(); ++i) {
        double s = 0.0;
        for (const ChebPoly& basis : dq_basis)
          s = std::max(s, std::abs(clenshaw_eval(basis, verify_pts[i])));
        enforce_limit[i] = 3e-11 * s;
      }
    }
    std::vector<double> signed_vals(verify_pts.size());
    double scale = 0.0;
    for (size_t i = 0; i < verify_pts.size(); ++i) {
      double v = clenshaw_eval(dq, verify_pts[i]);
      scale = std::max(scale, std::abs(v));
      signed_vals[i] = sign_pattern(*constraint, verify_pts[i]) * v;
    }
    double shape_tol = 1e-10 * (1.0 + scale);
    bool feasible = true;
    for (size_t i = 0; i < verify_pts.size(); ++i)
      if (signed_vals[i] < -(shape_tol + enforce_limit[i])) feasible = false;
    if (feasible) {
      res.converged = true;
      break;
    }
    if (round + 1 >= max_rounds) {
      res.converged = false;
      break;
    }
    // Augment with every violating local minimum; the single-worst variant
    // stalls when the optimum touches zero tangentially in several basins.
    int added = 0;
    for (size_t i = 0; i < verify_pts.size() && added < 64; ++i) {
      bool local_min = (i == 0 || signed_vals[i] <= signed_vals[i - 1]) &&
                       (i + 1 == verify_pts.size() || signed_vals[i] <= signed_vals[i + 1]);
      if (local_min && signed_vals[i] < -(shape_tol + enforce_limit[i])) {
        lp.add_shape_row(*constraint, dq_basis, verify_pts[i]);
        cuts.push_back(verify_pts[i]);
        ++added;
      }
    }
  }

  res.lower_bound = std::min(first_round_t, res.error);
  res.active_set = detail::extract_active_set(f, res.polynomial, spec, grid,
                                              res.error, constraint, cuts);
  return res;
}

// One-shot LP oracle: residual and shape constraints imposed together on a
// single dense Lobatto grid, no cutting planes. Test-side ground truth.
inline double brute_force_oracle(const TestFunction& f, int n,
                                 const std::optional<ShapeConstraint>& constraint,
                                 const WeightSpec& spec, int grid_points = 2001) {
  if (n > 12) throw std::invalid_argument("brute_force_oracle: n capped at 12");
  if (grid_points < 2001)
    throw std::invalid_argument("brute_force_oracle: need at least 2001 grid points");

  Grid grid = cheb_grid(grid_points - 1);
  bool drop_left = weight_vanishes_at(spec, -1.0);
  bool drop_right = weight_vanishes_at(spec, 1.0);
  if (drop_left) grid.nodes.erase(grid.nodes.begin());
  if (drop_right) grid.nodes.pop_back();
  grid.includes_endpoints = !(drop_left || drop_right);

  detail::MinimaxLp lp(n);
  lp.add_residual_rows(f, spec, grid);
  lp.add_interpolation_rows(f, spec);
  if (constraint && constraint->q < n) {
    std::vector<ChebPoly> dq_basis = detail::derivative_basis(n, constraint->q);
    for (double u : detail::shape_cut_points(*constraint, grid_points - 1))
      lp.add_shape_row(*constraint, dq_basis, u);
  }
  return lp.solve().objective;
}

}  // namespace spa
