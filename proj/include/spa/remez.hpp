#pragma once

// Best unconstrained uniform approximation by Remez exchange, with
// equioscillation certificates and de la Vallee Poussin lower bounds.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spa/chebyshev.hpp"
#include "spa/test_function.hpp"

namespace spa {

struct AlternationReport {
  std::vector<double> points;  // increasing
  std::vector<int> signs;      // strictly alternating +-1
  std::vector<double> values;  // residual values at the points
  bool valid = false;
  std::string defect;  // empty when valid, otherwise what failed
};

struct ActiveSetReport {
  std::vector<double> residual_nodes;  // nodes where |f-P| = t*w (within tol)
  std::vector<double> shape_nodes;     // nodes where sigma*P^(q) ~ 0
};

struct ApproxResult {
  ChebPoly polynomial;
  double error = 0.0;        // achieved value of the minimized norm
  double lower_bound = 0.0;  // certified lower bound on the optimum
  int iterations = 0;
  bool converged = false;
  double tolerance = 0.0;  // tolerance the run was asked for
  std::optional<AlternationReport> alternation;
  std::optional<ActiveSetReport> active_set;
};

namespace detail {

// Gaussian elimination with partial pivoting; A is overwritten.
inline std::vector<double> solve_dense(std::vector<std::vector<double>> A,
                                       std::vector<double> rhs) {
  size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    if (std::abs(A[piv][col]) < 1e-300)
      throw std::runtime_error("solve_dense: singular system");
    std::swap(A[piv], A[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = col + 1; r < n; ++r) {
      double factor = A[r][col] / A[col][col];
      if (factor == 0.0) continue;
      for (size_t j = col; j < n; ++j) A[r][j] -= factor * A[col][j];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (size_t r = n; r-- > 0;) {
    double s = rhs[r];
    for (size_t j = r + 1; j < n; ++j) s -= A[r][j] * x[j];
    x[r] = s / A[r][r];
  }
  return x;
}

// Scan grid for residual extrema: Lobatto base of about 8*n^2 points,
// densified x8 around the known kinks where alternation points cluster.
inline std::vector<double> residual_scan_grid(int n, const std::vector<double>& kinks) {
  int base = std::max(512, 8 * n * n);
  // Round up to a multiple of n so T_n extrema land exactly on nodes.
  if (base % std::max(1, n) != 0) base += n - base % n;
  std::vector<double> pts = cheb_grid(base).nodes;
  for (double z : kinks) {
    double w = std::max(0.05, 2.0 / std::max(1, n));
    double lo = std::max(-1.0, z - w), hi = std::min(1.0, z + w);
    int extra = 8 * std::max(64, 2 * n * n) / 8;
    for (int i = 0; i <= extra; ++i)
      pts.push_back(lo + (hi - lo) * i / extra);
    pts.push_back(z);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

struct Extremum {
  double x;
  double value;  // signed residual
};

// Golden-section maximization of |r| on a bracket; returns the signed value.
inline Extremum refine_extremum(const std::function<double(double)>& r,
                                double a, double b) {
  constexpr double gr = 0.6180339887498949;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = std::abs(r(c)), fd = std::abs(r(d));
  for (int it = 0; it < 60 && b - a > 1e-13; ++it) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = std::abs(r(d));
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = std::abs(r(c));
    }
  }
  double x = 0.5 * (a + b);
  return Extremum{x, r(x)};
}

// Local extrema of the residual on the scan grid, each refined by a
// golden-section search over the surrounding bracket.
inline std::vector<Extremum> residual_extrema(
    const std::vector<double>& grid, const std::vector<double>& resid,
    const std::function<double(double)>& residual_fn) {
  std::vector<Extremum> out;
  size_t n = grid.size();
  for (size_t i = 0; i < n; ++i) {
    bool is_max = (i == 0 || resid[i] >= resid[i - 1]) &&
                  (i + 1 == n || resid[i] >= resid[i + 1]);
    bool is_min = (i == 0 || resid[i] <= resid[i - 1]) &&
                  (i + 1 == n || resid[i] <= resid[i + 1]);
    if (!is_max && !is_min) continue;
    Extremum e{grid[i], resid[i]};
    if (i > 0 && i + 1 < n) {
      Extremum ref = refine_extremum(residual_fn, grid[i - 1], grid[i + 1]);
      if (std::abs(ref.value) >= std::abs(e.value)) e = ref;
    }
    out.push_back(e);
  }
  return out;
}

// Reduces alternating candidates to exactly n_keep points, dropping the
// weakest endpoint or the weakest adjacent pair so alternation survives.
inline void prune_reference(std::vector<Extremum>& ref, size_t n_keep) {
  while (ref.size() > n_keep) {
    if (ref.size() == n_keep + 1) {
      if (std::abs(ref.front().value) < std::abs(ref.back().value))
        ref.erase(ref.begin());
      else
        ref.pop_back();
      continue;
    }
    size_t best = 0;
    double best_mag = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < ref.size(); ++i) {
      double mag = std::max(std::abs(ref[i].value), std::abs(ref[i + 1].value));
      if (mag < best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    ref.erase(ref.begin() + static_cast<long>(best),
              ref.begin() + static_cast<long>(best) + 2);
  }
}

}  // namespace detail

// Finds the residual's alternation set and checks the equioscillation
// certificate: at least n+1 consecutive alternations whose magnitudes match
// the error to 1e-8 relative. An absolute floor of 1e-11*(1+||f||) covers
// what double-precision residual evaluation can resolve; exact-reproduction
// runs (error below 1e-12*(1+||f||)) pass vacuously.
inline AlternationReport alternation_certificate(const ApproxResult& result,
                                                 const TestFunction& f) {
  int n = result.polynomial.degree_bound;
  AlternationReport rep;
  const ChebPoly& p = result.polynomial;
  auto residual = [&](double x) { return f(x) - clenshaw_eval(p, x); };
  std::vector<double> grid = detail::residual_scan_grid(n, f.kink_points);
  std::vector<double> resid(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) resid[i] = residual(grid[i]);
  std::vector<detail::Extremum> ext =
      detail::residual_extrema(grid, resid, residual);

  // Merge runs of equal sign, keeping the largest magnitude in each run.
  std::vector<detail::Extremum> alt;
  for (const auto& e : ext) {
    if (e.value == 0.0) continue;
    if (!alt.empty() && (alt.back().value > 0) == (e.value > 0)) {
      if (std::abs(e.value) > std::abs(alt.back().value)) alt.back() = e;
    } else {
      alt.push_back(e);
    }
  }
  for (const auto& e : alt) {
    rep.points.push_back(e.x);
    rep.signs.push_back(e.value > 0 ? 1 : -1);
    rep.values.push_back(e.value);
  }

  if (result.error <= 1e-12 * (1.0 + f.sup_norm_estimate)) {
    rep.valid = true;
    return rep;
  }

  double tol = std::max(1e-8 * result.error, 1e-11 * (1.0 + f.sup_norm_estimate));
  // Longest run of consecutive alternations at full magnitude.
  size_t best_run = 0, run = 0;
  for (const auto& e : alt) {
    if (std::abs(e.value) >= result.error - tol)
      best_run = std::max(best_run, ++run);
    else
      run = 0;
  }
  if (best_run < static_cast<size_t>(n + 1)) {
    rep.defect = (static_cast<int>(alt.size()) < n + 1 ? "count: " : "magnitude: ") +
                 std::to_string(alt.size()) + " alternations, " +
                 std::to_string(best_run) + " at full magnitude, need " +
                 std::to_string(n + 1);
    return rep;
  }
  rep.valid = true;
  return rep;
}

// Remez exchange for the best degree-<n uniform approximation. The reference
// starts at the Lobatto extrema and is exchanged against the scan-grid
// extrema of the residual until max|r| and the levelled |h| agree within tol.
inline ApproxResult best_unconstrained(const TestFunction& f, int n,
                                       double tol = 1e-9) {
  if (n < 1) throw std::invalid_argument("best_unconstrained: n must be >= 1");
  if (n > kMaxDegree)
    throw std::invalid_argument("best_unconstrained: degree cap exceeded");

  ApproxResult res;
  res.tolerance = tol;
  std::vector<double> ref = cheb_grid(n).nodes;  // n+1 points

  std::vector<double> scan = detail::residual_scan_grid(n, f.kink_points);
  std::vector<double> fscan(scan.size());
  for (size_t i = 0; i < scan.size(); ++i) fscan[i] = f(scan[i]);

  double floor = 1e-13 * (1.0 + f.sup_norm_estimate);
  const int max_iter = 100;
  double h = 0.0;

  for (int iter = 1; iter <= max_iter; ++iter) {
    res.iterations = iter;
    // Levelled interpolation on the reference: P(x_i) + (-1)^i h = f(x_i).
    size_t sys = ref.size();
    std::vector<std::vector<double>> A(sys, std::vector<double>(sys));
    std::vector<double> rhs(sys);
    for (size_t i = 0; i < sys; ++i) {
      double T0 = 1.0, T1 = ref[i];
      for (size_t j = 0; j + 1 < sys; ++j) {
        if (j == 0)
          A[i][j] = 1.0;
        else if (j == 1)
          A[i][j] = ref[i];
        else {
          double T2 = 2.0 * ref[i] * T1 - T0;
          A[i][j] = T2;
          T0 = T1;
          T1 = T2;
        }
      }
      A[i][sys - 1] = (i % 2 == 0) ? 1.0 : -1.0;
      rhs[i] = f(ref[i]);
    }
    std::vector<double> sol = detail::solve_dense(std::move(A), std::move(rhs));
    h = sol.back();
    sol.pop_back();
    res.polynomial = ChebPoly(std::move(sol), n);

    std::vector<double> resid(scan.size());
    for (size_t i = 0; i < scan.size(); ++i)
      resid[i] = fscan[i] - clenshaw_eval(res.polynomial, scan[i]);
    auto residual_fn = [&](double x) {
      return f(x) - clenshaw_eval(res.polynomial, x);
    };
    std::vector<detail::Extremum> ext =
        detail::residual_extrema(scan, resid, residual_fn);

    double maxr = 0.0;
    for (const auto& e : ext) maxr = std::max(maxr, std::abs(e.value));
    res.error = maxr;
    res.lower_bound = std::abs(h);

    if (maxr <= floor || maxr - std::abs(h) <= tol * (1.0 + maxr)) {
      res.converged = true;
      // Below the double-precision residual noise floor the max-of-noise bias
      // dominates; the levelled |h| is the cleaner estimate of the optimum.
      if (maxr > floor &&
          maxr - std::abs(h) <= 1e-13 * (1.0 + f.sup_norm_estimate))
        res.error = std::abs(h);
      break;
    }

    // Multi-point exchange: alternating extrema, global max included.
    std::vector<detail::Extremum> alt;
    for (const auto& e : ext) {
      if (std::abs(e.value) <= 1e-300) continue;
      if (!alt.empty() && (alt.back().value > 0) == (e.value > 0)) {
        if (std::abs(e.value) > std::abs(alt.back().value)) alt.back() = e;
      } else {
        alt.push_back(e);
      }
    }
    if (alt.size() >= ref.size()) {
      detail::prune_reference(alt, ref.size());
      for (size_t i = 0; i < ref.size(); ++i) ref[i] = alt[i].x;
      continue;
    }
    // Deficient alternation (degenerate levelled solve, e.g. an even f with
    // symmetric reference): single-point exchange of the worst extremum
    // against the sign pattern (-1)^i to break the symmetry.
    const detail::Extremum* worst = nullptr;
    for (const auto& e : ext)
      if (!worst || std::abs(e.value) > std::abs(worst->value)) worst = &e;
    if (!worst || std::abs(worst->value) <= 1e-300) {
      res.converged = maxr - std::abs(h) <= std::max(tol, 1e-7) * (1.0 + maxr);
      break;
    }
    int want = worst->value > 0 ? +1 : -1;
    double hsign = h >= 0 ? +1.0 : -1.0;
    size_t j = 0;
    while (j < ref.size() && ref[j] < worst->x) ++j;
    // Reference residual sign at index i is hsign * (-1)^i.
    auto sign_at = [&](size_t i) {
      return (i % 2 == 0 ? +1 : -1) * (hsign >= 0 ? +1 : -1);
    };
    if (j == 0) {
      if (sign_at(0) != want) {
        ref.pop_back();
        ref.insert(ref.begin(), worst->x);
      } else {
        ref[0] = worst->x;
      }
    } else if (j == ref.size()) {
      if (sign_at(ref.size() - 1) != want) {
        ref.erase(ref.begin());
        ref.push_back(worst->x);
      } else {
        ref.back() = worst->x;
      }
    } else {
      ref[sign_at(j) == want ? j : j - 1] = worst->x;
    }
  }

  res.lower_bound = std::min(res.lower_bound, res.error);
  if (res.converged)
    res.alternation = alternation_certificate(res, f);
  return res;
}

}  // namespace spa
