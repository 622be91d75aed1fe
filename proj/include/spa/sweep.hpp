#pragma once

// Degree sweeps: run the appropriate solver per degree, attach the scaled
// column n^alpha * value, and estimate the first degree from which the scaled
// values stay below a cap.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "spa/constrained.hpp"
#include "spa/shape.hpp"
#include "spa/test_function.hpp"
#include "spa/weights.hpp"

namespace spa {

struct ErrorRow {
  int n = 0;
  double value = 0.0;
  double scaled = 0.0;
  double lower_bound = 0.0;
  bool converged = false;
  int iterations = 0;
  std::string note;  // per-row failure diagnostics; empty when clean
};

struct ErrorTable {
  std::string function_id;
  std::optional<ShapeConstraint> constraint;
  WeightKind weight_kind = WeightKind::Unweighted;
  double weight_alpha = 0.0;
  double alpha = 0.0;  // exponent of the scaled column
  int n_from = 0, n_to = 0;
  std::vector<ErrorRow> rows;
  double sup_scaled = 0.0;
  std::optional<double> cap;
  // Smallest n0 in the window with all scaled values <= cap from n0 on.
  std::optional<int> n_star_candidate;
};

// All degrees are measured against one shared norm grid (sized for the top
// degree) so the value column is comparable across rows; per-degree grids
// would confound the monotonicity checks. Delta weights still re-anchor their
// n parameter per row.
inline ErrorTable sweep(const TestFunction& f,
                        const std::optional<ShapeConstraint>& constraint,
                        const WeightSpec& weight, int n_from, int n_to,
                        double alpha, std::optional<double> cap = {},
                        double tol = 1e-9) {
  if (n_from < 1 || n_to < n_from)
    throw std::invalid_argument("sweep: bad degree window");
  if (n_to > kMaxDegree) throw std::invalid_argument("sweep: degree cap exceeded");
  if (constraint && n_from <= constraint->q && constraint->q + 1 <= n_to)
    n_from = constraint->q + 1;

  ErrorTable table;
  table.function_id = f.id;
  table.constraint = constraint;
  table.weight_kind = weight.kind;
  table.weight_alpha = weight.alpha;
  table.alpha = alpha;
  table.n_from = n_from;
  table.n_to = n_to;
  table.cap = cap;

  WeightSpec row_weight = weight;
  if (row_weight.kind == WeightKind::DeltaAlpha) row_weight.n_param = n_to;
  Grid grid = default_norm_grid(n_to, row_weight);

  for (int n = n_from; n <= n_to; ++n) {
    ErrorRow row;
    row.n = n;
    if (weight.kind == WeightKind::DeltaAlpha) {
      row_weight = WeightSpec::delta_alpha(weight.alpha, n);
      grid = default_norm_grid(n_to, row_weight);
    }
    try {
      ApproxResult r = best_constrained(f, n, constraint, row_weight, tol, &grid);
      row.value = r.error;
      row.lower_bound = r.lower_bound;
      row.converged = r.converged;
      row.iterations = r.iterations;
      if (!r.converged) row.note = "cutting-plane loop exhausted";
    } catch (const SolverError& e) {
      row.converged = false;
      row.note = e.what();
    }
    row.scaled = std::pow(n, alpha) * row.value;
    table.sup_scaled = std::max(table.sup_scaled, row.scaled);
    table.rows.push_back(std::move(row));
  }

  if (cap) {
    for (size_t i = 0; i < table.rows.size(); ++i) {
      bool all_below = true;
      for (size_t j = i; j < table.rows.size(); ++j)
        if (table.rows[j].scaled > *cap) all_below = false;
      if (all_below) {
        table.n_star_candidate = table.rows[i].n;
        break;
      }
    }
  }
  return table;
}

}  // namespace spa
