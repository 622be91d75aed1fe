#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spa/constrained.hpp"

using namespace spa;

namespace {

TestFunction xabsx() {
  TestFunction f = make_test_function("xabsx", [](double x) { return x * std::abs(x); });
  f.kink_points = {0.0};
  return f;
}

}  // namespace

TEST_CASE("monotone approximation of a decreasing line costs exactly 1") {
  TestFunction f = make_test_function("neg_x", [](double x) { return -x; });
  for (int n : {1, 2, 4, 7}) {
    ApproxResult r = best_constrained(f, n, ShapeConstraint(1, {}),
                                      WeightSpec::unweighted(), 1e-9);
    REQUIRE(r.converged);
    CHECK(r.error == Catch::Approx(1.0).margin(1e-8));
  }
}

TEST_CASE("monotone approximation of x^2 at n=2") {
  TestFunction f = make_test_function("x2", [](double x) { return x * x; });
  ApproxResult r = best_constrained(f, 2, ShapeConstraint(1, {}),
                                    WeightSpec::unweighted(), 1e-9);
  REQUIRE(r.converged);
  CHECK(r.error == Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("coconvex reproduction of x^3 with change point 0") {
  TestFunction f = make_test_function("x3", [](double x) { return x * x * x; });
  ApproxResult r = best_constrained(f, 4, ShapeConstraint(2, {0.0}),
                                    WeightSpec::unweighted(), 1e-9);
  REQUIRE(r.converged);
  CHECK(r.error <= 1e-10);
}

TEST_CASE("cutting planes agree with the dense-grid oracle on a shared norm grid") {
  TestFunction f = xabsx();
  Grid dense = cheb_grid(2000);
  ApproxResult r = best_constrained(f, 8, ShapeConstraint(1, {}),
                                    WeightSpec::unweighted(), 1e-9, &dense);
  REQUIRE(r.converged);
  double oracle = brute_force_oracle(f, 8, ShapeConstraint(1, {}),
                                     WeightSpec::unweighted(), 2001);
  CHECK(r.error == Catch::Approx(oracle).margin(1e-7));
}

TEST_CASE("oracle forced values") {
  TestFunction neg = make_test_function("neg_x", [](double x) { return -x; });
  CHECK(brute_force_oracle(neg, 4, ShapeConstraint(1, {}), WeightSpec::unweighted()) ==
        Catch::Approx(1.0).margin(1e-8));
  TestFunction sq = make_test_function("x2", [](double x) { return x * x; });
  CHECK(brute_force_oracle(sq, 2, ShapeConstraint(1, {}), WeightSpec::unweighted()) ==
        Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("monotone exp matches its unconstrained approximation") {
  TestFunction f = make_test_function("exp", [](double x) { return std::exp(x); });
  Grid dense = cheb_grid(2000);
  ApproxResult con = best_constrained(f, 6, ShapeConstraint(1, {}),
                                      WeightSpec::unweighted(), 1e-9, &dense);
  REQUIRE(con.converged);
  double oracle = brute_force_oracle(f, 6, ShapeConstraint(1, {}),
                                     WeightSpec::unweighted(), 2001);
  CHECK(con.error == Catch::Approx(oracle).margin(1e-7));
  // The unconstrained minimax approximant of exp is already nondecreasing, so
  // the Remez value must agree with the constrained one.
  ApproxResult remez = best_unconstrained(f, 6, 1e-12);
  REQUIRE(remez.converged);
  CHECK(is_co_q_monotone(remez.polynomial, ShapeConstraint(1, {}), 512, 1e-10).feasible);
  CHECK(con.error == Catch::Approx(remez.error).margin(1e-7));
}

TEST_CASE("constrained error dominates the unconstrained error on the same grid") {
  TestFunction f = xabsx();
  for (int n : {4, 6, 9}) {
    ApproxResult unc = best_constrained(f, n, std::nullopt, WeightSpec::unweighted());
    ApproxResult con = best_constrained(f, n, ShapeConstraint(1, {}),
                                        WeightSpec::unweighted());
    REQUIRE(unc.converged);
    REQUIRE(con.converged);
    CHECK(con.error >= unc.error - 1e-9);
    CHECK(con.lower_bound <= con.error + 1e-12);
  }
}

TEST_CASE("weighted functional chain at a single degree") {
  TestFunction f = make_test_function("exp", [](double x) { return std::exp(x); });
  int n = 6;
  double alpha = 1.0;
  ShapeConstraint mono(1, {});
  double e_tilde = best_constrained(f, n, std::nullopt,
                                    WeightSpec::delta_alpha(alpha, n)).error;
  double e_phi = best_constrained(f, n, std::nullopt,
                                  WeightSpec::phi_alpha(alpha)).error;
  double e_tilde_1 = best_constrained(f, n, mono,
                                      WeightSpec::delta_alpha(alpha, n)).error;
  double e_phi_1 = best_constrained(f, n, mono, WeightSpec::phi_alpha(alpha)).error;
  double slack = 1e-8;
  CHECK(e_tilde <= e_phi + slack);
  CHECK(e_phi <= e_phi_1 + slack);
  CHECK(e_tilde <= e_tilde_1 + slack);
  CHECK(e_tilde_1 <= e_phi_1 + slack);
}

TEST_CASE("returned polynomial passes a fresh x32 shape verification") {
  TestFunction f = xabsx();
  ApproxResult r = best_constrained(f, 9, ShapeConstraint(1, {}),
                                    WeightSpec::unweighted());
  REQUIRE(r.converged);
  ChebPoly dq = derivative(r.polynomial, 1);
  double scale = 0.0;
  for (double u : cheb_grid(32 * 64).nodes)
    scale = std::max(scale, std::abs(clenshaw_eval(dq, u)));
  ShapeReport rep = is_co_q_monotone(r.polynomial, ShapeConstraint(1, {}),
                                     32 * 64 + 1, 1e-10 * (1.0 + scale));
  CHECK(rep.feasible);
}

TEST_CASE("constrained error shrinks monotonically in the degree") {
  TestFunction f = xabsx();
  // Shared measurement grid; per-degree grids would confound the comparison.
  Grid common = cheb_grid(32 * 9);
  double prev = 1e300;
  for (int n = 3; n <= 9; ++n) {
    ApproxResult r = best_constrained(f, n, ShapeConstraint(1, {}),
                                      WeightSpec::unweighted(), 1e-9, &common);
    REQUIRE(r.converged);
    CHECK(r.error <= prev + 1e-9);
    prev = r.error;
  }
}

TEST_CASE("vacuous shape constraint when q >= n") {
  TestFunction f = make_test_function("abs", [](double x) { return std::abs(x); });
  ApproxResult shaped = best_constrained(f, 2, ShapeConstraint(3, {}),
                                         WeightSpec::unweighted());
  ApproxResult plain = best_constrained(f, 2, std::nullopt, WeightSpec::unweighted());
  REQUIRE(shaped.converged);
  CHECK(shaped.error == Catch::Approx(plain.error).margin(1e-12));
}

TEST_CASE("interpolatory weighted solve pins the endpoints") {
  TestFunction f = make_test_function("exp", [](double x) { return std::exp(x); });
  ApproxResult r = best_constrained(f, 5, ShapeConstraint(1, {}),
                                    WeightSpec::phi_alpha(1.0));
  REQUIRE(r.converged);
  CHECK(clenshaw_eval(r.polynomial, -1.0) == Catch::Approx(std::exp(-1.0)).margin(1e-9));
  CHECK(clenshaw_eval(r.polynomial, 1.0) == Catch::Approx(std::exp(1.0)).margin(1e-9));
}

TEST_CASE("oracle argument validation") {
  TestFunction f = make_test_function("x", [](double x) { return x; });
  CHECK_THROWS_AS(brute_force_oracle(f, 13, std::nullopt, WeightSpec::unweighted()),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_oracle(f, 4, std::nullopt, WeightSpec::unweighted(), 500),
                  std::invalid_argument);
}
