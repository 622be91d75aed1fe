#pragma once

// Piecewise polynomials in the monomial basis over a breakpoint partition of
// [-1,1]. The catalog uses these for truncated powers, |product| primitives
// and their exact derivatives; degrees stay small so monomial conditioning
// is not a concern.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spa {

struct PiecewisePoly {
  std::vector<double> breaks;               // interior breakpoints, ascending
  std::vector<std::vector<double>> pieces;  // breaks.size()+1 coefficient rows

  PiecewisePoly() : pieces{{0.0}} {}

  static PiecewisePoly constant(double c) {
    PiecewisePoly p;
    p.pieces = {{c}};
    return p;
  }

  // Product of (x - r) over the given roots, as a single global piece.
  static PiecewisePoly from_roots(const std::vector<double>& roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
      std::vector<double> nxt(c.size() + 1, 0.0);
      for (size_t i = 0; i < c.size(); ++i) {
        nxt[i + 1] += c[i];
        nxt[i] -= r * c[i];
      }
      c = std::move(nxt);
    }
    PiecewisePoly p;
    p.pieces = {std::move(c)};
    return p;
  }

  size_t piece_index(double x) const {
    size_t i = 0;
    while (i < breaks.size() && x > breaks[i]) ++i;
    return i;
  }

  double eval(double x) const {
    const std::vector<double>& c = pieces[piece_index(x)];
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  }

  double operator()(double x) const { return eval(x); }

  // Refines the partition to include the given points.
  void split_at(const std::vector<double>& pts) {
    for (double p : pts) {
      if (std::abs(p) >= 1.0) continue;
      auto it = std::lower_bound(breaks.begin(), breaks.end(), p);
      if (it != breaks.end() && *it == p) continue;
      size_t idx = static_cast<size_t>(it - breaks.begin());
      breaks.insert(it, p);
      pieces.insert(pieces.begin() + static_cast<long>(idx) + 1, pieces[idx]);
    }
  }

  // |p|: flips pieces that are negative on their interval. Only valid when
  // sign changes happen at breakpoints, so callers split at the roots first.
  PiecewisePoly abs() const {
    PiecewisePoly r = *this;
    std::vector<double> edges{-1.0};
    edges.insert(edges.end(), breaks.begin(), breaks.end());
    edges.push_back(1.0);
    for (size_t i = 0; i < r.pieces.size(); ++i) {
      double mid = 0.5 * (edges[i] + edges[i + 1]);
      if (eval(mid) < 0.0)
        for (double& c : r.pieces[i]) c = -c;
    }
    return r;
  }

  PiecewisePoly operator*(const PiecewisePoly& o) const {
    PiecewisePoly a = *this, b = o;
    a.split_at(o.breaks);
    b.split_at(breaks);
    PiecewisePoly r;
    r.breaks = a.breaks;
    r.pieces.assign(a.pieces.size(), {});
    for (size_t k = 0; k < a.pieces.size(); ++k) {
      const auto& u = a.pieces[k];
      const auto& v = b.pieces[k];
      std::vector<double> w(u.size() + v.size() - 1, 0.0);
      for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
      r.pieces[k] = std::move(w);
    }
    return r;
  }

  PiecewisePoly operator+(const PiecewisePoly& o) const {
    PiecewisePoly a = *this, b = o;
    a.split_at(o.breaks);
    b.split_at(breaks);
    PiecewisePoly r;
    r.breaks = a.breaks;
    r.pieces.assign(a.pieces.size(), {});
    for (size_t k = 0; k < a.pieces.size(); ++k) {
      std::vector<double> w(std::max(a.pieces[k].size(), b.pieces[k].size()), 0.0);
      for (size_t i = 0; i < a.pieces[k].size(); ++i) w[i] += a.pieces[k][i];
      for (size_t i = 0; i < b.pieces[k].size(); ++i) w[i] += b.pieces[k][i];
      r.pieces[k] = std::move(w);
    }
    return r;
  }

  PiecewisePoly scale(double s) const {
    PiecewisePoly r = *this;
    for (auto& piece : r.pieces)
      for (double& c : piece) c *= s;
    return r;
  }

  PiecewisePoly derivative() const {
    PiecewisePoly r;
    r.breaks = breaks;
    r.pieces.assign(pieces.size(), {});
    for (size_t k = 0; k < pieces.size(); ++k) {
      const auto& c = pieces[k];
      if (c.size() <= 1) {
        r.pieces[k] = {0.0};
        continue;
      }
      std::vector<double> d(c.size() - 1);
      for (size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
      r.pieces[k] = std::move(d);
    }
    return r;
  }

  // Antiderivative, continuous across breakpoints, with F(-1) = value_at_minus1.
  PiecewisePoly antiderivative(double value_at_minus1 = 0.0) const {
    PiecewisePoly r;
    r.breaks = breaks;
    r.pieces.assign(pieces.size(), {});
    std::vector<double> edges{-1.0};
    edges.insert(edges.end(), breaks.begin(), breaks.end());
    double left_value = value_at_minus1;
    for (size_t k = 0; k < pieces.size(); ++k) {
      const auto& c = pieces[k];
      std::vector<double> F(c.size() + 1, 0.0);
      for (size_t i = 0; i < c.size(); ++i) F[i + 1] = c[i] / static_cast<double>(i + 1);
      double at_left = 0.0;
      for (size_t i = F.size(); i-- > 0;) at_left = at_left * edges[k] + F[i];
      F[0] = left_value - at_left;
      r.pieces[k] = F;
      if (k < breaks.size()) {
        double b = breaks[k];
        double v = 0.0;
        for (size_t i = F.size(); i-- > 0;) v = v * b + F[i];
        left_value = v;
      }
    }
    return r;
  }

  PiecewisePoly antiderivative_n(int n, double value_at_minus1 = 0.0) const {
    PiecewisePoly r = *this;
    for (int i = 0; i < n; ++i) r = r.antiderivative(value_at_minus1);
    return r;
  }
};

}  // namespace spa
