#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spa/lp.hpp"
#include "spa/remez.hpp"

using namespace spa;

namespace {

TestFunction absfun() {
  TestFunction f = make_test_function("abs", [](double x) { return std::abs(x); });
  f.kink_points = {0.0};
  return f;
}

// One-shot minimax LP on a dense Lobatto grid, kink-refined; independent
// check of the exchange algorithm.
double lp_minimax(const TestFunction& f, int n, int grid_m) {
  std::vector<double> nodes = cheb_grid(grid_m).nodes;
  for (double z : f.kink_points) {
    for (int i = 0; i <= 2000; ++i)
      nodes.push_back(z - 0.1 + 0.2 * i / 2000.0);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::remove_if(nodes.begin(), nodes.end(),
                             [](double x) { return x < -1.0 || x > 1.0; }),
              nodes.end());
  int nv = n + 1;  // coefficients c_0..c_{n-1} plus t
  std::vector<LpRow> rows;
  for (double x : nodes) {
    std::vector<double> trow(static_cast<size_t>(nv), 0.0);
    double t0 = 1.0, t1 = x;
    for (int k = 0; k < n; ++k) {
      if (k == 0)
        trow[0] = 1.0;
      else if (k == 1)
        trow[1] = x;
      else {
        double t2 = 2 * x * t1 - t0;
        trow[static_cast<size_t>(k)] = t2;
        t0 = t1;
        t1 = t2;
      }
    }
    double fx = f(x);
    std::vector<double> r1 = trow;
    r1[static_cast<size_t>(n)] = 1.0;  // P(x) + t >= f(x)
    rows.push_back({r1, '>', fx});
    for (double& v : r1) v = -v;
    r1[static_cast<size_t>(n)] = 1.0;  // -P(x) + t >= -f(x)
    rows.push_back({r1, '>', -fx});
  }
  std::vector<double> obj(static_cast<size_t>(nv), 0.0);
  obj[static_cast<size_t>(n)] = 1.0;
  LpResult res = lp_solve(nv, obj, rows);
  REQUIRE(res.status == LpStatus::Optimal);
  return res.objective;
}

}  // namespace

TEST_CASE("best approximation of x^3 out of P_3") {
  TestFunction f = make_test_function("x3", [](double x) { return x * x * x; });
  ApproxResult r = best_unconstrained(f, 3, 1e-12);
  REQUIRE(r.converged);
  CHECK(r.error == Catch::Approx(0.25).margin(1e-10));
  // Optimal polynomial is (3/4) x.
  CHECK(clenshaw_eval(r.polynomial, 0.5) == Catch::Approx(0.375).margin(1e-10));
  CHECK(clenshaw_eval(r.polynomial, -0.8) == Catch::Approx(-0.6).margin(1e-10));

  REQUIRE(r.alternation.has_value());
  const AlternationReport& cert = *r.alternation;
  CHECK(cert.valid);
  REQUIRE(cert.points.size() >= 4);
  // Extrema of T_3/4 at cos(k pi / 3): -1, -1/2, 1/2, 1.
  CHECK(cert.points.front() == Catch::Approx(-1.0).margin(1e-8));
  CHECK(cert.points.back() == Catch::Approx(1.0).margin(1e-8));
  CHECK(cert.signs.front() == -1);
  for (size_t i = 1; i < cert.signs.size(); ++i)
    CHECK(cert.signs[i] == -cert.signs[i - 1]);
}

TEST_CASE("best approximation of x^2 out of P_2") {
  TestFunction f = make_test_function("x2", [](double x) { return x * x; });
  ApproxResult r = best_unconstrained(f, 2, 1e-12);
  REQUIRE(r.converged);
  CHECK(r.error == Catch::Approx(0.5).margin(1e-10));
  CHECK(clenshaw_eval(r.polynomial, 0.123) == Catch::Approx(0.5).margin(1e-10));
  REQUIRE(r.alternation.has_value());
  CHECK(r.alternation->valid);
  REQUIRE(r.alternation->points.size() >= 3);
  CHECK(r.alternation->values.front() == Catch::Approx(0.5).margin(1e-8));
}

TEST_CASE("monic Chebyshev errors across degrees") {
  for (int n = 2; n <= 20; ++n) {
    TestFunction f = make_test_function(
        "xn", [n](double x) { return std::pow(x, n); });
    ApproxResult r = best_unconstrained(f, n, 1e-12);
    REQUIRE(r.converged);
    double expect = std::pow(2.0, 1 - n);
    CHECK(r.error == Catch::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("exp at n=5 carries a full certificate") {
  TestFunction f = make_test_function("exp", [](double x) { return std::exp(x); });
  ApproxResult r = best_unconstrained(f, 5, 1e-12);
  REQUIRE(r.converged);
  REQUIRE(r.alternation.has_value());
  CHECK(r.alternation->valid);
  CHECK(r.alternation->points.size() >= 6);
  double tol = std::max(1e-8 * r.error, 1e-11 * 4.0);
  size_t full = 0;
  for (double v : r.alternation->values)
    if (std::abs(v) >= r.error - tol) ++full;
  CHECK(full >= 6);
}

TEST_CASE("abs at n=10 matches the dense-grid LP oracle") {
  TestFunction f = absfun();
  ApproxResult r = best_unconstrained(f, 10, 1e-12);
  REQUIRE(r.converged);
  double oracle = lp_minimax(f, 10, 4000);
  CHECK(r.error == Catch::Approx(oracle).margin(1e-7));
}

TEST_CASE("degree monotonicity for abs") {
  TestFunction f = absfun();
  double prev = 1e300;
  for (int n = 2; n <= 12; ++n) {
    ApproxResult r = best_unconstrained(f, n, 1e-10);
    REQUIRE(r.converged);
    CHECK(r.error <= prev + 1e-9);
    CHECK(r.lower_bound <= r.error);
    prev = r.error;
  }
}

TEST_CASE("polynomial reproduction gives zero error") {
  TestFunction f = make_test_function(
      "poly", [](double x) { return 1.0 + x - 0.5 * x * x * x; });
  f.polynomial_degree = 3;
  ApproxResult r = best_unconstrained(f, 6, 1e-9);
  REQUIRE(r.converged);
  CHECK(r.error <= 1e-12 * (1.0 + f.sup_norm_estimate));
  REQUIRE(r.alternation.has_value());
  CHECK(r.alternation->valid);
}

TEST_CASE("optimality sandwich on converged runs") {
  TestFunction f = make_test_function("exp", [](double x) { return std::exp(x); });
  for (int n : {2, 4, 7}) {
    ApproxResult r = best_unconstrained(f, n, 1e-9);
    REQUIRE(r.converged);
    CHECK(r.lower_bound <= r.error);
    CHECK(r.error - r.lower_bound <= 1e-9 * (1.0 + r.error) + 1e-14);
  }
}

TEST_CASE("degree cap and bad arguments are rejected") {
  TestFunction f = make_test_function("exp", [](double x) { return std::exp(x); });
  CHECK_THROWS_AS(best_unconstrained(f, 51, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(best_unconstrained(f, 0, 1e-9), std::invalid_argument);
}
