#pragma once

// Report emission: the stable JSON schema, CSV tables, and the optional
// log-log SVG plot. JSON objects are alphabetically ordered and carry no
// wall-clock content, so identical runs serialize byte-identically.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spa/sweep.hpp"
#include "spa/theorems.hpp"

namespace spa {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json weight_to_json(WeightKind kind, double alpha) {
  const char* name = kind == WeightKind::Unweighted  ? "none"
                     : kind == WeightKind::PhiAlpha  ? "phi"
                     : kind == WeightKind::DeltaAlpha ? "delta"
                                                       : "custom";
  return {{"kind", name}, {"alpha", alpha}};
}

inline nlohmann::json rows_to_json(const std::vector<ErrorRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ErrorRow& r : rows) {
    nlohmann::json j{{"n", r.n},
                     {"value", r.value},
                     {"scaled", r.scaled},
                     {"lower_bound", r.lower_bound},
                     {"converged", r.converged}};
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out;
}

inline nlohmann::json table_to_json(const ErrorTable& t) {
  nlohmann::json j;
  j["function"] = t.function_id;
  if (t.constraint) {
    j["q"] = t.constraint->q;
    j["ys"] = t.constraint->change_points;
  }
  j["weight"] = weight_to_json(t.weight_kind, t.weight_alpha);
  j["alpha"] = t.alpha;
  j["n_from"] = t.n_from;
  j["n_to"] = t.n_to;
  j["sup_scaled"] = t.sup_scaled;
  if (t.cap) j["cap"] = *t.cap;
  if (t.n_star_candidate) j["n_star_candidate"] = *t.n_star_candidate;
  j["rows"] = rows_to_json(t.rows);
  return j;
}

inline std::string table_to_csv(const ErrorTable& t) {
  std::ostringstream os;
  os << "n,value,scaled,lower_bound,converged\n";
  os.precision(17);
  for (const ErrorRow& r : t.rows)
    os << r.n << ',' << r.value << ',' << r.scaled << ',' << r.lower_bound << ','
       << (r.converged ? 1 : 0) << '\n';
  return os.str();
}

inline std::string table_to_text(const ErrorTable& t) {
  std::ostringstream os;
  os.precision(10);
  os << "# " << t.function_id;
  if (t.constraint) {
    os << "  q=" << t.constraint->q << " ys=[";
    for (size_t i = 0; i < t.constraint->change_points.size(); ++i)
      os << (i ? "," : "") << t.constraint->change_points[i];
    os << "]";
  }
  os << "  alpha=" << t.alpha << "\n";
  os << "    n          value         scaled    lower_bound  ok\n";
  for (const ErrorRow& r : t.rows) {
    os.width(5);
    os << r.n;
    os.width(15);
    os << r.value;
    os.width(15);
    os << r.scaled;
    os.width(15);
    os << r.lower_bound;
    os << "  " << (r.converged ? "yes" : "NO");
    if (!r.note.empty()) os << "  " << r.note;
    os << "\n";
  }
  if (t.n_star_candidate)
    os << "# first degree with scaled column below " << *t.cap << ": "
       << *t.n_star_candidate << "\n";
  return os.str();
}

inline std::string regime_table_to_text(const RegimeTable& t) {
  std::ostringstream os;
  os << (t.half_alpha_rows ? "rows: ceil(alpha/2)" : "rows: ceil(alpha)")
     << ", columns: N = 1.." << t.num_cols << "\n";
  for (int r = t.num_rows; r >= 1; --r) {
    os.width(4);
    os << r << " |";
    for (int c = 1; c <= t.num_cols; ++c) {
      std::string s = cell_utf8(
          t.cells[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]);
      // Glyph count, not byte count (the symbols are multibyte).
      size_t glyphs = 0;
      for (char ch : s)
        if ((ch & 0xC0) != 0x80) ++glyphs;
      os << ' ' << s;
      for (size_t pad = glyphs; pad < 3; ++pad) os << ' ';
    }
    os << "\n";
  }
  return os.str();
}

inline std::string regime_table_to_csv(const RegimeTable& t) {
  std::ostringstream os;
  os << "row";
  for (int c = 1; c <= t.num_cols; ++c) os << ",N" << c;
  os << "\n";
  for (int r = t.num_rows; r >= 1; --r) {
    os << r;
    for (int c = 1; c <= t.num_cols; ++c)
      os << ','
         << cell_token(t.cells[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]);
    os << "\n";
  }
  return os.str();
}

inline nlohmann::json regime_table_to_json(const RegimeTable& t) {
  nlohmann::json j;
  j["s"] = t.s;
  j["row_convention"] = t.half_alpha_rows ? "ceil(alpha/2)" : "ceil(alpha)";
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 1; r <= t.num_rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; c <= t.num_cols; ++c)
      row.push_back(cell_token(
          t.cells[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]));
    rows.push_back(std::move(row));
  }
  j["rows_ascending"] = std::move(rows);
  return j;
}

// Log-log degree-vs-value plot; one polyline per table.
inline void write_svg_loglog(const std::string& path,
                             const std::vector<ErrorTable>& series) {
  const double width = 640, height = 480, margin = 56;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const ErrorTable& t : series)
    for (const ErrorRow& r : t.rows) {
      if (r.value <= 0.0) continue;
      xmin = std::min(xmin, std::log10(static_cast<double>(r.n)));
      xmax = std::max(xmax, std::log10(static_cast<double>(r.n)));
      ymin = std::min(ymin, std::log10(r.value));
      ymax = std::max(ymax, std::log10(r.value));
    }
  if (xmin > xmax) {
    xmin = 0;
    xmax = 1;
  }
  if (ymin > ymax) {
    ymin = -1;
    ymax = 0;
  }
  if (xmax - xmin < 1e-9) xmax = xmin + 1;
  if (ymax - ymin < 1e-9) ymax = ymin + 1;
  auto X = [&](double lx) {
    return margin + (lx - xmin) / (xmax - xmin) * (width - 2 * margin);
  };
  auto Y = [&](double ly) {
    return height - margin - (ly - ymin) / (ymax - ymin) * (height - 2 * margin);
  };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b"};
  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
     << width - margin << "\" y2=\"" << height - margin
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
     << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
     << "\" font-size=\"12\" text-anchor=\"middle\">log10 n</text>\n";
  os << "<text x=\"14\" y=\"" << height / 2
     << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
     << height / 2 << ")\">log10 value</text>\n";
  int ci = 0;
  for (const ErrorTable& t : series) {
    std::ostringstream pts;
    for (const ErrorRow& r : t.rows) {
      if (r.value <= 0.0) continue;
      pts << X(std::log10(static_cast<double>(r.n))) << ','
          << Y(std::log10(r.value)) << ' ';
    }
    const char* color = colors[ci % 6];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
       << pts.str() << "\"/>\n";
    os << "<text x=\"" << width - margin + 4 << "\" y=\"" << margin + 14 * ci
       << "\" font-size=\"10\" fill=\"" << color << "\">" << t.function_id
       << (t.constraint ? " q=" + std::to_string(t.constraint->q) : "")
       << "</text>\n";
    ++ci;
  }
  os << "</svg>\n";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write SVG file " + path);
  out << os.str();
}

}  // namespace spa
