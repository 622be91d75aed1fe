#pragma once

// Moduli of smoothness omega_k(f, t) by direct maximization of k-th forward
// differences over a step ladder and a window sweep.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spa/test_function.hpp"

namespace spa {

// max over h in (0, t] and x with [x, x+kh] inside [-1,1] of |Delta_h^k f(x)|.
// Steps are laid out geometrically; kink-anchored windows are injected so
// suprema attained at kinks are hit exactly.
inline double omega_k(const TestFunction& f, int k, double t, int resolution = 64) {
  if (k < 1) throw std::invalid_argument("omega_k: k must be >= 1");
  if (t <= 0.0) throw std::invalid_argument("omega_k: t must be positive");
  if (k * t > 2.0)
    throw std::domain_error("omega_k: k*t exceeds the interval length");
  if (resolution < 64) resolution = 64;

  std::vector<double> binom(static_cast<size_t>(k) + 1);
  binom[0] = 1.0;
  for (int i = 1; i <= k; ++i)
    binom[static_cast<size_t>(i)] =
        binom[static_cast<size_t>(i - 1)] * (k - i + 1) / i;

  auto kth_difference = [&](double x, double h) {
    double s = 0.0;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i <= k; ++i) {
      s += sign * binom[static_cast<size_t>(i)] * f(x + i * h);
      sign = -sign;
    }
    return s;
  };

  double best = 0.0;
  int xsamples = resolution * 8;
  for (int hi = 0; hi < resolution; ++hi) {
    double h = t * std::pow(2.0, -8.0 * hi / (resolution - 1));
    double span = 2.0 - k * h;
    if (span < 0.0) continue;
    for (int xi = 0; xi <= xsamples; ++xi) {
      double x = -1.0 + span * xi / xsamples;
      best = std::max(best, std::abs(kth_difference(x, h)));
    }
    // Windows anchored so that a kink sits on each difference node.
    for (double z : f.kink_points) {
      for (int j = 0; j <= k; ++j) {
        double x = z - j * h;
        if (x >= -1.0 - 1e-15 && x + k * h <= 1.0 + 1e-15)
          best = std::max(best, std::abs(kth_difference(std::max(x, -1.0), h)));
      }
    }
  }
  return best;
}

}  // namespace spa
