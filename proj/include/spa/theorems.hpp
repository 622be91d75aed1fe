#pragma once

// Combinatorial layer: the exceptional exponent set A_s, the three-way
// threshold-regime classifier over (alpha, N, s), and regime tables rendered
// by sampling each cell's alpha range.

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spa {

enum class Regime { Plus, OPlus, OMinus };

enum class CellSymbol { Plus, OPlus, OMinus, PlusStar, OMinusTilde };

// A_s = { j : 1 <= j <= s-1 } union { 2j : 1 <= j <= s }.
inline std::set<int> exceptional_set(int s) {
  if (s < 0) throw std::invalid_argument("exceptional_set: s must be >= 0");
  std::set<int> a;
  for (int j = 1; j <= s - 1; ++j) a.insert(j);
  for (int j = 1; j <= s; ++j) a.insert(2 * j);
  return a;
}

inline bool in_exceptional_set(double alpha, int s) {
  double r = std::round(alpha);
  if (std::abs(alpha - r) > 1e-10) return false;
  int k = static_cast<int>(r);
  if (k >= 1 && k <= s - 1) return true;
  return k % 2 == 0 && k >= 2 && k <= 2 * s;
}

// The three-way classification of (alpha, N, s); the rules are evaluated in
// the order plus, ominus, otherwise oplus.
inline Regime classify_regime(double alpha, int N, int s) {
  if (alpha <= 0.0) throw std::invalid_argument("classify_regime: alpha must be > 0");
  if (N < 1) throw std::invalid_argument("classify_regime: N must be >= 1");
  if (s < 0) throw std::invalid_argument("classify_regime: s must be >= 0");

  int ceil_alpha = static_cast<int>(std::ceil(alpha - 1e-12));
  int ceil_half = static_cast<int>(std::ceil(alpha / 2.0 - 1e-12));

  bool plus = (!in_exceptional_set(alpha, s) && N <= ceil_half) ||
              (2.0 * s < alpha && alpha <= 2.0 * s + 2.0 && N <= s + 2) ||
              (alpha > 2.0 * s + 2.0);
  if (plus) return Regime::Plus;

  bool ominus =
      (ceil_alpha == 1 && ((s >= 1 && N >= s + 2) || (s == 0 && N >= 3))) ||
      (ceil_alpha == 2 && N >= s + 3);
  if (ominus) return Regime::OMinus;

  return Regime::OPlus;
}

struct RegimeTable {
  int s = 0;
  // Rows are indexed by ceil(alpha) for s = 1,2,3 and by ceil(alpha/2) for
  // s = 0 and s >= 4, matching the two printed conventions.
  bool half_alpha_rows = false;
  int num_rows = 0;
  int num_cols = 0;
  // cells[r-1][N-1], row index r ascending.
  std::vector<std::vector<CellSymbol>> cells;
};

// Resolves one cell by sampling {lower+eps, midpoint, upper} of every unit
// segment of the cell's alpha range; the classification is piecewise constant
// between integers, so these samples are exhaustive.
inline CellSymbol resolve_cell(double alpha_lo, double alpha_hi, int N, int s) {
  std::set<Regime> seen;
  for (double a = alpha_lo; a < alpha_hi - 1e-9; a += 1.0) {
    for (double sample : {a + 1e-9, a + 0.5, a + 1.0})
      seen.insert(classify_regime(sample, N, s));
  }
  if (seen.size() == 1) {
    switch (*seen.begin()) {
      case Regime::Plus: return CellSymbol::Plus;
      case Regime::OPlus: return CellSymbol::OPlus;
      case Regime::OMinus: return CellSymbol::OMinus;
    }
  }
  if (seen == std::set<Regime>{Regime::Plus, Regime::OPlus})
    return CellSymbol::PlusStar;
  if (seen == std::set<Regime>{Regime::OMinus, Regime::OPlus})
    return CellSymbol::OMinusTilde;
  throw std::logic_error("resolve_cell: unexpected regime mixture");
}

inline RegimeTable render_table(int s) {
  if (s < 0) throw std::invalid_argument("render_table: s must be >= 0");
  RegimeTable t;
  t.s = s;
  t.half_alpha_rows = (s == 0 || s >= 4);
  t.num_rows = t.half_alpha_rows ? std::max(4, s + 2) : 2 * s + 3;
  t.num_cols = std::max(4, s + 3);
  t.cells.assign(static_cast<size_t>(t.num_rows),
                 std::vector<CellSymbol>(static_cast<size_t>(t.num_cols)));
  for (int r = 1; r <= t.num_rows; ++r) {
    double lo = t.half_alpha_rows ? 2.0 * (r - 1) : r - 1.0;
    double hi = t.half_alpha_rows ? 2.0 * r : static_cast<double>(r);
    for (int N = 1; N <= t.num_cols; ++N)
      t.cells[static_cast<size_t>(r - 1)][static_cast<size_t>(N - 1)] =
          resolve_cell(lo, hi, N, s);
  }
  return t;
}

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::Plus: return "plus";
    case Regime::OPlus: return "oplus";
    case Regime::OMinus: return "ominus";
  }
  return "";
}

inline std::string cell_utf8(CellSymbol c) {
  switch (c) {
    case CellSymbol::Plus: return "+";
    case CellSymbol::OPlus: return "⊕";         // circled plus
    case CellSymbol::OMinus: return "⊖";        // circled minus
    case CellSymbol::PlusStar: return "⊛";      // circled asterisk
    case CellSymbol::OMinusTilde: return "⊖̃";
  }
  return "";
}

inline std::string cell_token(CellSymbol c) {
  switch (c) {
    case CellSymbol::Plus: return "plus";
    case CellSymbol::OPlus: return "oplus";
    case CellSymbol::OMinus: return "ominus";
    case CellSymbol::PlusStar: return "plus_star";
    case CellSymbol::OMinusTilde: return "ominus_tilde";
  }
  return "";
}

}  // namespace spa
