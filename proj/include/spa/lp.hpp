#pragma once

// Dense LP solver for small minimax problems: few free variables (polynomial
// coefficients plus the error level) against many inequality rows (residual
// bounds and shape cuts).
//
// The solver is an active-set dual simplex: it walks bases of at most
// num_vars rows, refactorizing the small working system from the original
// row data at every step, so tableau roundoff never accumulates. Equality
// rows are eliminated exactly up front. Entering/leaving choices are
// deterministic (most-violated row, ties by index) with a Bland fallback
// when the dual objective stalls.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spa {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpRow {
  std::vector<double> coeffs;
  char rel = '<';  // '<', '>' or '='
  double rhs = 0.0;
};

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  double objective = 0.0;
  std::vector<double> x;
  long long pivots = 0;
  // Largest violation of the row-equilibrated constraints by the returned
  // point; a sanity signal for numerical trouble.
  double max_violation = 0.0;
};

namespace detail {

struct Lu {
  int n = 0;
  std::vector<std::vector<double>> f;  // combined L\U factors
  std::vector<int> perm;               // perm[i] = source row of position i
  bool ok = false;
};

inline Lu lu_factor(std::vector<std::vector<double>> a) {
  Lu lu;
  lu.n = static_cast<int>(a.size());
  lu.perm.resize(static_cast<size_t>(lu.n));
  for (int i = 0; i < lu.n; ++i) lu.perm[static_cast<size_t>(i)] = i;
  for (int k = 0; k < lu.n; ++k) {
    int piv = k;
    for (int i = k + 1; i < lu.n; ++i)
      if (std::abs(a[static_cast<size_t>(i)][static_cast<size_t>(k)]) >
          std::abs(a[static_cast<size_t>(piv)][static_cast<size_t>(k)]))
        piv = i;
    if (std::abs(a[static_cast<size_t>(piv)][static_cast<size_t>(k)]) < 1e-13) {
      lu.ok = false;
      return lu;
    }
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(k)]);
    std::swap(lu.perm[static_cast<size_t>(piv)], lu.perm[static_cast<size_t>(k)]);
    double inv = 1.0 / a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < lu.n; ++i) {
      double m = a[static_cast<size_t>(i)][static_cast<size_t>(k)] * inv;
      a[static_cast<size_t>(i)][static_cast<size_t>(k)] = m;
      if (m != 0.0)
        for (int j = k + 1; j < lu.n; ++j)
          a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
              m * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  }
  lu.f = std::move(a);
  lu.ok = true;
  return lu;
}

// Solve A x = rhs given PA = LU.
inline std::vector<double> lu_solve(const Lu& lu, const std::vector<double>& rhs) {
  int n = lu.n;
  std::vector<double> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<size_t>(i)] = rhs[static_cast<size_t>(lu.perm[static_cast<size_t>(i)])];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      x[static_cast<size_t>(i)] -=
          lu.f[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
  for (int i = n; i-- > 0;) {
    for (int j = i + 1; j < n; ++j)
      x[static_cast<size_t>(i)] -=
          lu.f[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] /= lu.f[static_cast<size_t>(i)][static_cast<size_t>(i)];
  }
  return x;
}

// Solve A^T x = rhs given PA = LU (so A^T = U^T L^T P).
inline std::vector<double> lu_solve_t(const Lu& lu, const std::vector<double>& rhs) {
  int n = lu.n;
  std::vector<double> y = rhs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j)
      y[static_cast<size_t>(i)] -=
          lu.f[static_cast<size_t>(j)][static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] /= lu.f[static_cast<size_t>(i)][static_cast<size_t>(i)];
  }
  for (int i = n; i-- > 0;)
    for (int j = i + 1; j < n; ++j)
      y[static_cast<size_t>(i)] -=
          lu.f[static_cast<size_t>(j)][static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
  std::vector<double> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<size_t>(lu.perm[static_cast<size_t>(i)])] = y[static_cast<size_t>(i)];
  return x;
}

// Exact elimination of equality rows: z = z_p + N w with N spanning the
// nullspace. Reduced-row helpers carry inequality rows into w-space.
struct EqReduction {
  int full_dim = 0;
  int reduced_dim = 0;
  std::vector<double> z_particular;
  std::vector<int> free_cols;
  // For pivot r: column pivot_cols[r] expressed via free columns:
  // z[pivot] = rref_rhs[r] - sum_j rref[r][free_j] * w_j.
  std::vector<int> pivot_cols;
  std::vector<std::vector<double>> rref;
  std::vector<double> rref_rhs;
  bool infeasible = false;

  std::vector<double> reduce_row(const std::vector<double>& a) const {
    std::vector<double> out(static_cast<size_t>(reduced_dim));
    for (int j = 0; j < reduced_dim; ++j) {
      double v = a[static_cast<size_t>(free_cols[static_cast<size_t>(j)])];
      for (size_t r = 0; r < pivot_cols.size(); ++r)
        v -= rref[r][static_cast<size_t>(j)] *
             a[static_cast<size_t>(pivot_cols[r])];
      out[static_cast<size_t>(j)] = v;
    }
    return out;
  }

  double offset(const std::vector<double>& a) const {
    double v = 0.0;
    for (int j = 0; j < full_dim; ++j)
      v += a[static_cast<size_t>(j)] * z_particular[static_cast<size_t>(j)];
    return v;
  }

  std::vector<double> expand(const std::vector<double>& w) const {
    std::vector<double> z = z_particular;
    for (int j = 0; j < reduced_dim; ++j)
      z[static_cast<size_t>(free_cols[static_cast<size_t>(j)])] +=
          w[static_cast<size_t>(j)];
    for (size_t r = 0; r < pivot_cols.size(); ++r) {
      double v = 0.0;
      for (int j = 0; j < reduced_dim; ++j)
        v += rref[r][static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
      z[static_cast<size_t>(pivot_cols[r])] -= v;
    }
    return z;
  }
};

inline EqReduction reduce_equalities(
    int nv, std::vector<std::pair<std::vector<double>, double>> eqs) {
  EqReduction red;
  red.full_dim = nv;
  std::vector<bool> used(static_cast<size_t>(nv), false);
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (auto& [a, b] : eqs) {
    rows.push_back(a);
    rhs.push_back(b);
  }
  // Elimination with column pivoting into reduced row echelon form. Pivot
  // rows are collected only after the full sweep: later eliminations keep
  // rewriting earlier rows.
  std::vector<size_t> pivot_rows;
  for (size_t r = 0; r < rows.size(); ++r) {
    int p = -1;
    double best = 1e-11;
    for (int cidx = 0; cidx < nv; ++cidx)
      if (!used[static_cast<size_t>(cidx)] &&
          std::abs(rows[r][static_cast<size_t>(cidx)]) > best) {
        best = std::abs(rows[r][static_cast<size_t>(cidx)]);
        p = cidx;
      }
    if (p < 0) {
      if (std::abs(rhs[r]) > 1e-9) red.infeasible = true;
      continue;  // redundant equality
    }
    used[static_cast<size_t>(p)] = true;
    red.pivot_cols.push_back(p);
    pivot_rows.push_back(r);
    double inv = 1.0 / rows[r][static_cast<size_t>(p)];
    for (double& v : rows[r]) v *= inv;
    rhs[r] *= inv;
    for (size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 == r) continue;
      double m = rows[r2][static_cast<size_t>(p)];
      if (m == 0.0) continue;
      for (int j = 0; j < nv; ++j)
        rows[r2][static_cast<size_t>(j)] -= m * rows[r][static_cast<size_t>(j)];
      rhs[r2] -= m * rhs[r];
    }
  }
  for (size_t r : pivot_rows) {
    red.rref.push_back(rows[r]);
    red.rref_rhs.push_back(rhs[r]);
  }
  for (int cidx = 0; cidx < nv; ++cidx)
    if (!used[static_cast<size_t>(cidx)]) red.free_cols.push_back(cidx);
  red.reduced_dim = static_cast<int>(red.free_cols.size());
  red.z_particular.assign(static_cast<size_t>(nv), 0.0);
  for (size_t r = 0; r < red.pivot_cols.size(); ++r)
    red.z_particular[static_cast<size_t>(red.pivot_cols[r])] = red.rref_rhs[r];
  // Compress the stored rows to the free columns only.
  for (size_t r = 0; r < red.rref.size(); ++r) {
    std::vector<double> compact(static_cast<size_t>(red.reduced_dim));
    for (int j = 0; j < red.reduced_dim; ++j)
      compact[static_cast<size_t>(j)] =
          red.rref[r][static_cast<size_t>(red.free_cols[static_cast<size_t>(j)])];
    red.rref[r] = std::move(compact);
  }
  return red;
}

}  // namespace detail

// Minimizes objective^T x over free variables subject to the rows.
inline LpResult lp_solve(int num_vars, const std::vector<double>& objective,
                         const std::vector<LpRow>& rows) {
  if (static_cast<int>(objective.size()) != num_vars)
    throw std::invalid_argument("lp_solve: objective size mismatch");
  LpResult res;

  // Split off equalities, turn the rest into a_i . z >= b_i form.
  std::vector<std::pair<std::vector<double>, double>> eqs;
  std::vector<std::vector<double>> ge_rows;
  std::vector<double> ge_rhs;
  for (const LpRow& r : rows) {
    if (static_cast<int>(r.coeffs.size()) != num_vars)
      throw std::invalid_argument("lp_solve: row size mismatch");
    if (r.rel == '=') {
      eqs.emplace_back(r.coeffs, r.rhs);
    } else if (r.rel == '>') {
      ge_rows.push_back(r.coeffs);
      ge_rhs.push_back(r.rhs);
    } else if (r.rel == '<') {
      std::vector<double> neg = r.coeffs;
      for (double& v : neg) v = -v;
      ge_rows.push_back(std::move(neg));
      ge_rhs.push_back(-r.rhs);
    } else {
      throw std::invalid_argument("lp_solve: unknown relation");
    }
  }

  detail::EqReduction red = detail::reduce_equalities(num_vars, std::move(eqs));
  if (red.infeasible) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  int nv = red.reduced_dim;
  std::vector<double> cred = red.reduce_row(objective);

  if (nv == 0) {
    // Everything pinned by equalities; just check the inequalities.
    res.x = red.z_particular;
    res.objective = red.offset(objective);
    for (size_t i = 0; i < ge_rows.size(); ++i) {
      double lhs = 0.0;
      for (int j = 0; j < num_vars; ++j)
        lhs += ge_rows[i][static_cast<size_t>(j)] * res.x[static_cast<size_t>(j)];
      if (lhs < ge_rhs[i] - 1e-9) res.status = LpStatus::Infeasible;
    }
    return res;
  }

  // Reduced, row-equilibrated inequality system. Rows with nonzero right side
  // get a deterministic relaxation below 1e-11, which breaks the heavy dual
  // degeneracy of symmetric minimax instances; homogeneous rows (shape cuts)
  // stay exact so the cutting loop can rely on them.
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  double bscale = 0.0;
  for (size_t i = 0; i < ge_rows.size(); ++i) {
    std::vector<double> a = red.reduce_row(ge_rows[i]);
    double rhs = ge_rhs[i] - red.offset(ge_rows[i]);
    // Rows whose coefficients cancel to rounding dust under the equality
    // reduction carry no direction, only a feasibility verdict.
    double orig_scale = std::abs(ge_rhs[i]);
    for (double v : ge_rows[i]) orig_scale = std::max(orig_scale, std::abs(v));
    double mag = 0.0;
    for (double v : a) mag = std::max(mag, std::abs(v));
    if (mag <= 1e-12 * orig_scale) {
      if (rhs > 1e-9 * orig_scale) {
        res.status = LpStatus::Infeasible;
        return res;
      }
      continue;
    }
    double scale = std::abs(rhs);
    for (double v : a) scale = std::max(scale, std::abs(v));
    for (double& v : a) v /= scale;
    rhs /= scale;
    if (rhs != 0.0) {
      unsigned h = static_cast<unsigned>(A.size() + 1) * 2654435761u;
      rhs -= 1e-11 * (0.5 + static_cast<double>(h & 0xFFFF) / 65536.0);
    }
    bscale = std::max(bscale, std::abs(rhs));
    A.push_back(std::move(a));
    b.push_back(rhs);
  }
  size_t n_user = A.size();

  // Signed box rows provide a dual-feasible starting basis for any objective:
  // sum_k |c_k| * (sign_k e_k) = c with all multipliers nonnegative.
  double box = 1e7 * (1.0 + bscale);
  for (int k = 0; k < nv; ++k) {
    std::vector<double> a(static_cast<size_t>(nv), 0.0);
    a[static_cast<size_t>(k)] = cred[static_cast<size_t>(k)] > 0.0 ? 1.0 : -1.0;
    A.push_back(std::move(a));
    b.push_back(-box);
  }

  std::vector<int> basis(static_cast<size_t>(nv));
  for (int k = 0; k < nv; ++k) basis[static_cast<size_t>(k)] = static_cast<int>(n_user) + k;

  const long long max_iters = 200000;
  const double feas_tol = 1e-11;
  std::vector<double> w;
  double last_dual = -std::numeric_limits<double>::infinity();
  long long stall = 0;
  bool bland = false;

  for (long long iter = 0;; ++iter) {
    if (iter >= max_iters) {
      res.status = LpStatus::IterationLimit;
      return res;
    }
    ++res.pivots;
    std::vector<std::vector<double>> Aw(static_cast<size_t>(nv));
    std::vector<double> bw(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
      Aw[static_cast<size_t>(i)] = A[static_cast<size_t>(basis[static_cast<size_t>(i)])];
      bw[static_cast<size_t>(i)] = b[static_cast<size_t>(basis[static_cast<size_t>(i)])];
    }
    detail::Lu lu = detail::lu_factor(Aw);
    if (!lu.ok) {
      res.status = LpStatus::IterationLimit;  // singular working basis
      return res;
    }
    w = detail::lu_solve(lu, bw);
    std::vector<double> lambda = detail::lu_solve_t(lu, cred);

    // Dual objective for stall detection.
    double dual = 0.0;
    for (int i = 0; i < nv; ++i)
      dual += lambda[static_cast<size_t>(i)] * bw[static_cast<size_t>(i)];
    if (dual > last_dual + 1e-14 * (1.0 + std::abs(last_dual))) {
      last_dual = dual;
      stall = 0;
      bland = false;
    } else if (++stall > 256) {
      bland = true;
    }

    // Most violated row enters (smallest index when in Bland mode).
    int enter = -1;
    double worst = -feas_tol;
    for (size_t j = 0; j < n_user; ++j) {
      double v = -b[j];
      const std::vector<double>& aj = A[j];
      for (int k = 0; k < nv; ++k) v += aj[static_cast<size_t>(k)] * w[static_cast<size_t>(k)];
      if (v < worst) {
        worst = v;
        enter = static_cast<int>(j);
        if (bland) break;
      }
    }
    if (enter == -1) {
      // Optimal. A box row active with a real multiplier means the true
      // problem is unbounded in that direction.
      for (int i = 0; i < nv; ++i)
        if (basis[static_cast<size_t>(i)] >= static_cast<int>(n_user) &&
            lambda[static_cast<size_t>(i)] > 1e-7) {
          res.status = LpStatus::Unbounded;
          return res;
        }
      break;
    }

    std::vector<double> d = detail::lu_solve_t(lu, A[static_cast<size_t>(enter)]);
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < nv; ++i) {
      if (d[static_cast<size_t>(i)] <= 1e-11) continue;
      double ratio = std::max(lambda[static_cast<size_t>(i)], 0.0) / d[static_cast<size_t>(i)];
      if (leave < 0) {
        leave = i;
        best_ratio = ratio;
        continue;
      }
      double tie = 1e-12 * (1.0 + std::abs(best_ratio));
      if (ratio < best_ratio - tie ||
          (ratio <= best_ratio + tie &&
           basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
        best_ratio = std::min(ratio, best_ratio);
        leave = i;
      }
    }
    if (leave == -1) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    basis[static_cast<size_t>(leave)] = enter;
  }

  std::vector<double> z = red.expand(w);
  res.x = z;
  res.objective = 0.0;
  for (int j = 0; j < num_vars; ++j)
    res.objective += objective[static_cast<size_t>(j)] * z[static_cast<size_t>(j)];
  for (size_t j = 0; j < n_user; ++j) {
    double lhs = -b[j];
    for (int k = 0; k < nv; ++k) lhs += A[j][static_cast<size_t>(k)] * w[static_cast<size_t>(k)];
    res.max_violation = std::max(res.max_violation, -lhs);
  }
  return res;
}

}  // namespace spa
