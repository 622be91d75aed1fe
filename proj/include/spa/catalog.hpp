#pragma once

// The catalog of target functions: monomials, exp, kinked and truncated
// powers, signed primitives built from a change collection, and the blended
// perturbation entries. Every asserted shape-class membership is re-checked
// numerically at construction.

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spa/chebyshev.hpp"
#include "spa/piecewise.hpp"
#include "spa/shape.hpp"
#include "spa/test_function.hpp"

namespace spa {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using ParamMap = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string params;  // documented parameters with defaults
};

namespace detail {

inline double param_double(const ParamMap& p, const std::string& key, double dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  try {
    size_t used = 0;
    double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("catalog: bad numeric value for parameter '" + key + "'");
  }
}

inline int param_int(const ParamMap& p, const std::string& key, int dflt) {
  double v = param_double(p, key, dflt);
  int i = static_cast<int>(std::lround(v));
  if (std::abs(v - i) > 1e-12)
    throw ConfigError("catalog: parameter '" + key + "' must be an integer");
  return i;
}

// Comma-separated change points, strictly decreasing.
inline std::vector<double> param_ys(const ParamMap& p, const std::string& key,
                                    const std::vector<double>& dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  std::vector<double> ys;
  std::stringstream ss(it->second);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      ys.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError("catalog: bad change point list '" + it->second + "'");
    }
  }
  return ys;
}

// Wires a piecewise polynomial and its derivative chain into a TestFunction.
inline TestFunction from_piecewise(const std::string& id, const PiecewisePoly& pp,
                                   int max_order = 6) {
  std::vector<PiecewisePoly> chain{pp};
  for (int j = 1; j <= max_order; ++j) chain.push_back(chain.back().derivative());
  TestFunction t = make_test_function(id, [p = chain[0]](double x) { return p(x); });
  t.r_max = max_order;
  for (int j = 1; j <= max_order; ++j)
    t.derivative_evals.push_back(
        [p = chain[static_cast<size_t>(j)]](double x) { return p(x); });
  return t;
}

inline void check_membership(const TestFunction& t) {
  for (const ShapeConstraint& c : t.shape_classes) {
    bool approx = false;
    auto dq = t.derivative(c.q, &approx);
    double scale = 1.0;
    std::vector<double> vals(2001);
    for (int i = 0; i < 2001; ++i) {
      double x = -1.0 + 2.0 * (i + 0.5) / 2001.0;
      vals[static_cast<size_t>(i)] = dq(x);
      scale = std::max(scale, std::abs(vals[static_cast<size_t>(i)]));
    }
    for (int i = 0; i < 2001; ++i) {
      double x = -1.0 + 2.0 * (i + 0.5) / 2001.0;
      // One-sided derivative values are ambiguous at the change points.
      bool at_change = false;
      for (double y : c.change_points)
        if (std::abs(x - y) < 1e-9) at_change = true;
      if (at_change) continue;
      if (sign_pattern(c, x) * vals[static_cast<size_t>(i)] < -1e-9 * scale) {
        throw std::logic_error("catalog: entry '" + t.id +
                               "' fails its asserted shape class (q=" +
                               std::to_string(c.q) + ")");
      }
    }
  }
}

inline PiecewisePoly signed_product(const std::vector<double>& ys) {
  std::vector<double> roots(ys.begin(), ys.end());
  PiecewisePoly prod = PiecewisePoly::from_roots(roots);
  prod.split_at(roots);
  return prod;
}

}  // namespace detail

inline TestFunction get_function(const std::string& id, const ParamMap& params = {});

inline std::vector<CatalogEntry> list_catalog() {
  return {
      {"monomial", "scale * x^k", "k=3 (0..20), scale=1"},
      {"exp", "exponential e^x", ""},
      {"abs", "|x - a|", "a=0"},
      {"xabsx", "x * |x|", ""},
      {"trunc", "truncated power (x-a)_+^m", "m=1 (1..3), a=0"},
      {"signed_primitive",
       "q-fold antiderivative of prod(x-y_i): polynomial co-q-monotone member",
       "q=1, ys=0"},
      {"abs_primitive", "q-fold antiderivative of |prod(x-y_i)|", "q=1, ys=0"},
      {"signed_abs_primitive",
       "q-fold antiderivative of prod(x-y_i)*|prod(x-y_i)|", "q=1, ys=0"},
      {"q3_family", "|x-y1|^3 / 3: third derivative flips sign at y1", "y1=0"},
      {"op117", "x^5/20 - x^3/24: second derivative x(x^2-1/4)", ""},
      {"op117_pert",
       "op117 plus lambda times a same-sign-pattern non-polynomial bump",
       "lambda=0.5"},
      {"shifted_power", "(x+1)^(r+beta)", "r=1, beta=0.5 (0<beta<2)"},
      {"blend", "entry f plus lambda * entry g (default parameters)",
       "f=exp, g=abs, lambda=0.1"},
  };
}

namespace detail {

inline TestFunction make_monomial(int k, double scale) {
  if (k < 0 || k > 20) throw ConfigError("catalog: monomial k must be in 0..20");
  TestFunction t = make_test_function(
      "monomial", [k, scale](double x) { return scale * std::pow(x, k); });
  t.polynomial_degree = k;
  t.r_max = 6;
  for (int j = 1; j <= 6; ++j) {
    double factor = scale;
    for (int i = 0; i < j; ++i) factor *= (k - i);
    int kk = std::max(k - j, 0);
    bool vanished = j > k;
    t.derivative_evals.push_back([factor, kk, vanished](double x) {
      return vanished ? 0.0 : factor * std::pow(x, kk);
    });
  }
  t.sobolev_order = 8;
  for (int q = 1; q <= 4; ++q) {
    if (q > k) {
      t.shape_classes.emplace_back(q, std::vector<double>{});
    } else if (scale > 0.0) {
      if ((k - q) % 2 == 0)
        t.shape_classes.emplace_back(q, std::vector<double>{});
      else
        t.shape_classes.emplace_back(q, std::vector<double>{0.0});
    }
    // Negative scale with q <= k: no sign pattern starts +1 on the right.
  }
  return t;
}

inline TestFunction make_exp() {
  TestFunction t = make_test_function("exp", [](double x) { return std::exp(x); });
  t.r_max = 8;
  for (int j = 1; j <= 8; ++j)
    t.derivative_evals.push_back([](double x) { return std::exp(x); });
  t.sobolev_order = 8;
  for (int q = 1; q <= 4; ++q) t.shape_classes.emplace_back(q, std::vector<double>{});
  return t;
}

inline TestFunction make_abs(double a) {
  if (std::abs(a) >= 1.0) throw ConfigError("catalog: abs center must lie in (-1,1)");
  PiecewisePoly pp;
  pp.breaks = {a};
  pp.pieces = {{a, -1.0}, {-a, 1.0}};
  TestFunction t = from_piecewise("abs", pp);
  t.kink_points = {a};
  t.sobolev_order = 1;
  t.shape_classes = {ShapeConstraint(1, {a}), ShapeConstraint(2, {}),
                     ShapeConstraint(3, {a})};
  return t;
}

inline TestFunction make_xabsx() {
  PiecewisePoly pp;
  pp.breaks = {0.0};
  pp.pieces = {{0.0, 0.0, -1.0}, {0.0, 0.0, 1.0}};
  TestFunction t = from_piecewise("xabsx", pp);
  t.kink_points = {0.0};
  t.sobolev_order = 2;
  t.shape_classes = {ShapeConstraint(1, {}), ShapeConstraint(2, {0.0}),
                     ShapeConstraint(3, {})};
  return t;
}

inline TestFunction make_trunc(int m, double a) {
  if (m < 1 || m > 3) throw ConfigError("catalog: trunc m must be 1, 2 or 3");
  if (std::abs(a) >= 1.0) throw ConfigError("catalog: trunc a must lie in (-1,1)");
  // (x-a)^m expanded around a.
  PiecewisePoly pos = PiecewisePoly::from_roots(std::vector<double>(static_cast<size_t>(m), a));
  PiecewisePoly pp;
  pp.breaks = {a};
  pp.pieces = {{0.0}, pos.pieces[0]};
  TestFunction t = from_piecewise("trunc", pp);
  t.kink_points = {a};
  t.sobolev_order = m;
  for (int q = 1; q <= std::min(4, m + 1); ++q)
    t.shape_classes.emplace_back(q, std::vector<double>{});
  for (int q = 1; q <= 4; ++q)
    t.shape_classes.emplace_back(q, std::vector<double>{a});
  return t;
}

inline TestFunction make_signed_primitive(int q, const std::vector<double>& ys) {
  if (q < 1 || q > 4) throw ConfigError("catalog: q must be 1..4");
  PiecewisePoly prod = PiecewisePoly::from_roots(ys);
  TestFunction t = from_piecewise("signed_primitive", prod.antiderivative_n(q));
  t.polynomial_degree = static_cast<int>(ys.size()) + q;
  t.sobolev_order = 8;
  t.shape_classes = {ShapeConstraint(q, ys)};
  return t;
}

inline TestFunction make_abs_primitive(int q, const std::vector<double>& ys) {
  if (q < 1 || q > 4) throw ConfigError("catalog: q must be 1..4");
  PiecewisePoly body = signed_product(ys).abs();
  TestFunction t = from_piecewise("abs_primitive", body.antiderivative_n(q));
  t.kink_points = std::vector<double>(ys.rbegin(), ys.rend());
  t.sobolev_order = q + 1;
  t.shape_classes = {ShapeConstraint(q, {})};
  return t;
}

inline TestFunction make_signed_abs_primitive(int q, const std::vector<double>& ys) {
  if (q < 1 || q > 4) throw ConfigError("catalog: q must be 1..4");
  PiecewisePoly prod = signed_product(ys);
  PiecewisePoly body = prod * prod.abs();
  TestFunction t = from_piecewise("signed_abs_primitive", body.antiderivative_n(q));
  t.kink_points = std::vector<double>(ys.rbegin(), ys.rend());
  t.sobolev_order = q + 2;
  t.shape_classes = {ShapeConstraint(q, ys)};
  return t;
}

inline TestFunction make_q3_family(double y1) {
  if (std::abs(y1) >= 1.0) throw ConfigError("catalog: y1 must lie in (-1,1)");
  PiecewisePoly lin = signed_product({y1});
  PiecewisePoly body = lin * lin.abs();  // (x-y1)|x-y1|
  TestFunction t = from_piecewise("q3_family", body.antiderivative());
  t.kink_points = {y1};
  t.sobolev_order = 3;
  t.shape_classes = {ShapeConstraint(1, {y1}), ShapeConstraint(2, {}),
                     ShapeConstraint(3, {y1})};
  return t;
}

inline PiecewisePoly op117_poly() {
  PiecewisePoly pp;
  pp.pieces = {{0.0, 0.0, 0.0, -1.0 / 24.0, 0.0, 1.0 / 20.0}};
  return pp;
}

inline TestFunction make_op117() {
  TestFunction t = from_piecewise("op117", op117_poly());
  t.polynomial_degree = 5;
  t.sobolev_order = 8;
  double r = 1.0 / std::sqrt(2.0);
  t.shape_classes = {ShapeConstraint(2, {0.5, 0.0, -0.5}),
                     ShapeConstraint(1, {r, -r})};
  return t;
}

inline TestFunction make_op117_pert(double lambda) {
  if (lambda < 0.0) throw ConfigError("catalog: op117_pert lambda must be >= 0");
  PiecewisePoly prod = signed_product({0.5, 0.0, -0.5});
  PiecewisePoly bump2 = prod * prod.abs();  // second derivative of the bump
  PiecewisePoly f = op117_poly() + bump2.antiderivative_n(2).scale(lambda);
  TestFunction t = from_piecewise("op117_pert", f);
  t.kink_points = {-0.5, 0.0, 0.5};
  t.sobolev_order = 4;
  t.shape_classes = {ShapeConstraint(2, {0.5, 0.0, -0.5})};
  return t;
}

inline TestFunction make_shifted_power(int r, double beta) {
  if (r < 0 || r > 5) throw ConfigError("catalog: shifted_power r must be 0..5");
  if (beta <= 0.0 || beta >= 2.0)
    throw ConfigError("catalog: shifted_power beta must lie in (0,2)");
  double gamma = r + beta;
  TestFunction t = make_test_function(
      "shifted_power", [gamma](double x) { return std::pow(x + 1.0, gamma); });
  t.r_max = 6;
  for (int j = 1; j <= 6; ++j) {
    double factor = 1.0;
    for (int i = 0; i < j; ++i) factor *= (gamma - i);
    double e = gamma - j;
    t.derivative_evals.push_back([factor, e](double x) {
      return factor * std::pow(std::max(x + 1.0, 0.0), e);
    });
  }
  t.sobolev_order = static_cast<int>(std::floor(gamma));
  int qmax = std::min(4, static_cast<int>(std::floor(gamma)) + 1);
  for (int q = 1; q <= qmax; ++q)
    t.shape_classes.emplace_back(q, std::vector<double>{});
  return t;
}

inline TestFunction make_blend(const std::string& f_id, const std::string& g_id,
                               double lambda) {
  TestFunction a = get_function(f_id);
  TestFunction b = get_function(g_id);
  TestFunction t = make_test_function(
      "blend",
      [fa = a.eval, fb = b.eval, lambda](double x) { return fa(x) + lambda * fb(x); });
  t.r_max = std::min(a.r_max, b.r_max);
  for (int j = 1; j <= t.r_max; ++j)
    t.derivative_evals.push_back(
        [da = a.derivative_evals[static_cast<size_t>(j - 1)],
         db = b.derivative_evals[static_cast<size_t>(j - 1)],
         lambda](double x) { return da(x) + lambda * db(x); });
  t.kink_points = a.kink_points;
  t.kink_points.insert(t.kink_points.end(), b.kink_points.begin(), b.kink_points.end());
  std::sort(t.kink_points.begin(), t.kink_points.end());
  t.sobolev_order = std::min(a.sobolev_order, b.sobolev_order);
  if (a.polynomial_degree >= 0 && b.polynomial_degree >= 0)
    t.polynomial_degree = std::max(a.polynomial_degree, b.polynomial_degree);
  return t;
}

}  // namespace detail

inline TestFunction get_function(const std::string& id, const ParamMap& params) {
  using namespace detail;
  TestFunction t;
  if (id == "monomial") {
    t = make_monomial(param_int(params, "k", 3), param_double(params, "scale", 1.0));
  } else if (id == "exp") {
    t = make_exp();
  } else if (id == "abs") {
    t = make_abs(param_double(params, "a", 0.0));
  } else if (id == "xabsx") {
    t = make_xabsx();
  } else if (id == "trunc") {
    t = make_trunc(param_int(params, "m", 1), param_double(params, "a", 0.0));
  } else if (id == "signed_primitive") {
    t = make_signed_primitive(param_int(params, "q", 1), param_ys(params, "ys", {0.0}));
  } else if (id == "abs_primitive") {
    t = make_abs_primitive(param_int(params, "q", 1), param_ys(params, "ys", {0.0}));
  } else if (id == "signed_abs_primitive") {
    t = make_signed_abs_primitive(param_int(params, "q", 1),
                                  param_ys(params, "ys", {0.0}));
  } else if (id == "q3_family") {
    t = make_q3_family(param_double(params, "y1", 0.0));
  } else if (id == "op117") {
    t = make_op117();
  } else if (id == "op117_pert") {
    t = make_op117_pert(param_double(params, "lambda", 0.5));
  } else if (id == "shifted_power") {
    t = make_shifted_power(param_int(params, "r", 1), param_double(params, "beta", 0.5));
  } else if (id == "blend") {
    auto fid = params.count("f") ? params.at("f") : "exp";
    auto gid = params.count("g") ? params.at("g") : "abs";
    t = make_blend(fid, gid, param_double(params, "lambda", 0.1));
  } else {
    throw ConfigError("catalog: unknown function id '" + id + "'");
  }
  detail::check_membership(t);
  return t;
}

}  // namespace spa
