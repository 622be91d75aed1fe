#pragma once

// Chebyshev-T polynomial arithmetic on [-1,1]: Clenshaw evaluation,
// coefficient-space differentiation / antidifferentiation, Lobatto grids
// and direct (O(m^2)) interpolation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spa {

// Degrees above this are rejected: double precision does not support the
// solver accuracy targets beyond it.
inline constexpr int kMaxDegree = 50;

inline constexpr double kTrimRel = 1e-14;

struct ChebPoly {
  // coeffs[k] multiplies T_k; always non-empty.
  std::vector<double> coeffs{0.0};
  // The polynomial lives in the space of polynomials of degree < degree_bound.
  int degree_bound = 1;

  ChebPoly() = default;
  explicit ChebPoly(std::vector<double> c, int bound = -1) {
    if (c.empty()) c.push_back(0.0);
    if (static_cast<int>(c.size()) > kMaxDegree + 2)
      throw std::invalid_argument("ChebPoly: degree cap " +
                                  std::to_string(kMaxDegree) + " exceeded");
    coeffs = std::move(c);
    degree_bound = bound < 0 ? static_cast<int>(coeffs.size()) : bound;
    if (degree_bound < static_cast<int>(coeffs.size()))
      degree_bound = static_cast<int>(coeffs.size());
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  // Drops trailing coefficients below kTrimRel * max|c_i|.
  void trim() {
    double mx = 0.0;
    for (double c : coeffs) mx = std::max(mx, std::abs(c));
    double tol = kTrimRel * mx;
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= tol)
      coeffs.pop_back();
  }
};

enum class GridKind { ChebyshevLobatto, Uniform, Custom };

struct Grid {
  std::vector<double> nodes;  // strictly increasing, inside [-1,1]
  GridKind kind = GridKind::Custom;
  bool includes_endpoints = false;
};

inline double clenshaw_eval(const ChebPoly& p, double x) {
  if (std::abs(x) > 1.0 + 1e-12)
    throw std::domain_error("clenshaw_eval: x outside [-1,1]");
  double b1 = 0.0, b2 = 0.0;
  for (int k = p.degree(); k >= 1; --k) {
    double t = 2.0 * x * b1 - b2 + p.coeffs[static_cast<size_t>(k)];
    b2 = b1;
    b1 = t;
  }
  return x * b1 - b2 + p.coeffs[0];
}

inline ChebPoly differentiate(const ChebPoly& p) {
  int d = p.degree();
  if (d == 0) return ChebPoly({0.0}, std::max(1, p.degree_bound - 1));
  std::vector<double> b(static_cast<size_t>(d), 0.0);
  for (int k = d; k >= 1; --k) {
    double carry = (k + 1 < d) ? b[static_cast<size_t>(k + 1)] : 0.0;
    b[static_cast<size_t>(k - 1)] = carry + 2.0 * k * p.coeffs[static_cast<size_t>(k)];
  }
  b[0] *= 0.5;
  return ChebPoly(std::move(b), std::max(1, p.degree_bound - 1));
}

inline ChebPoly derivative(const ChebPoly& p, int order) {
  ChebPoly q = p;
  for (int i = 0; i < order; ++i) q = differentiate(q);
  return q;
}

// Antiderivative F with F(-1) = value_at_minus1.
inline ChebPoly integrate(const ChebPoly& p, double value_at_minus1) {
  int d = p.degree();
  auto a = [&](int k) {
    return k <= d ? p.coeffs[static_cast<size_t>(k)] : 0.0;
  };
  std::vector<double> B(static_cast<size_t>(d) + 2, 0.0);
  B[1] = a(0) - a(2) / 2.0;
  for (int k = 2; k <= d + 1; ++k)
    B[static_cast<size_t>(k)] = (a(k - 1) - a(k + 1)) / (2.0 * k);
  double at_minus1 = 0.0;
  double sgn = -1.0;  // T_k(-1) = (-1)^k
  for (int k = 1; k <= d + 1; ++k) {
    at_minus1 += sgn * B[static_cast<size_t>(k)];
    sgn = -sgn;
  }
  B[0] = value_at_minus1 - at_minus1;
  ChebPoly F(std::move(B), p.degree_bound + 1);
  F.trim();
  return F;
}

inline ChebPoly operator+(const ChebPoly& p, const ChebPoly& q) {
  std::vector<double> c(std::max(p.coeffs.size(), q.coeffs.size()), 0.0);
  for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
  for (size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
  return ChebPoly(std::move(c), std::max(p.degree_bound, q.degree_bound));
}

inline ChebPoly operator-(const ChebPoly& p, const ChebPoly& q) {
  std::vector<double> c(std::max(p.coeffs.size(), q.coeffs.size()), 0.0);
  for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
  for (size_t i = 0; i < q.coeffs.size(); ++i) c[i] -= q.coeffs[i];
  return ChebPoly(std::move(c), std::max(p.degree_bound, q.degree_bound));
}

inline ChebPoly operator*(double s, const ChebPoly& p) {
  std::vector<double> c = p.coeffs;
  for (double& v : c) v *= s;
  return ChebPoly(std::move(c), p.degree_bound);
}

// x * p(x) via x*T_k = (T_{k+1} + T_{k-1}) / 2.
inline ChebPoly shift_multiply(const ChebPoly& p) {
  int d = p.degree();
  std::vector<double> c(static_cast<size_t>(d) + 2, 0.0);
  for (int k = 0; k <= d; ++k) {
    double ak = p.coeffs[static_cast<size_t>(k)];
    if (k == 0) {
      c[1] += ak;
    } else {
      c[static_cast<size_t>(k + 1)] += 0.5 * ak;
      c[static_cast<size_t>(k - 1)] += 0.5 * ak;
    }
  }
  return ChebPoly(std::move(c), p.degree_bound + 1);
}

// Chebyshev-Lobatto nodes cos(j*pi/m), j = 0..m, ascending. Symmetrized so
// that nodes come in exact +- pairs and 0 is exact for even m.
inline Grid cheb_grid(int m) {
  if (m < 1) throw std::invalid_argument("cheb_grid: m must be >= 1");
  Grid g;
  g.kind = GridKind::ChebyshevLobatto;
  g.includes_endpoints = true;
  g.nodes.resize(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    double c1 = std::cos(static_cast<double>(m - j) * M_PI / m);
    double c2 = std::cos(static_cast<double>(j) * M_PI / m);
    g.nodes[static_cast<size_t>(j)] = 0.5 * (c1 - c2);
  }
  g.nodes.front() = -1.0;
  g.nodes.back() = 1.0;
  return g;
}

// Degree-<=m interpolant at Chebyshev-Lobatto nodes (discrete cosine sums).
inline ChebPoly interpolate(const std::function<double(double)>& f, int m) {
  if (m < 1) throw std::invalid_argument("interpolate: m must be >= 1");
  if (m > kMaxDegree)
    throw std::invalid_argument("interpolate: degree cap " +
                                std::to_string(kMaxDegree) + " exceeded");
  Grid g = cheb_grid(m);
  std::vector<double> fv(static_cast<size_t>(m) + 1);
  // f ordered by descending node index to match cos(j*pi/m).
  for (int j = 0; j <= m; ++j)
    fv[static_cast<size_t>(j)] = f(g.nodes[static_cast<size_t>(m - j)]);
  std::vector<double> c(static_cast<size_t>(m) + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    double s = 0.5 * fv[0];
    for (int j = 1; j < m; ++j)
      s += fv[static_cast<size_t>(j)] * std::cos(M_PI * j * k / m);
    s += 0.5 * fv[static_cast<size_t>(m)] * (k % 2 == 0 ? 1.0 : -1.0);
    c[static_cast<size_t>(k)] = 2.0 * s / m;
  }
  c[0] *= 0.5;
  c[static_cast<size_t>(m)] *= 0.5;
  ChebPoly p(std::move(c), m + 1);
  p.trim();
  return p;
}

}  // namespace spa
