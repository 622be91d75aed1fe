#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spa/shape.hpp"

using namespace spa;

TEST_CASE("sign_pattern follows the change collection") {
  ShapeConstraint y1(1, {0.0});
  CHECK(sign_pattern(y1, 0.5) == 1);
  CHECK(sign_pattern(y1, -0.5) == -1);
  CHECK(sign_pattern(y1, 0.0) == 1);  // tie toward +1

  ShapeConstraint y2(1, {0.5, -0.5});
  CHECK(sign_pattern(y2, 0.0) == -1);
  CHECK(sign_pattern(y2, 0.9) == 1);
  CHECK(sign_pattern(y2, -0.9) == 1);

  ShapeConstraint y0(2, {});
  CHECK(sign_pattern(y0, 0.3) == 1);
  CHECK(sign_pattern(y0, -0.99) == 1);
}

TEST_CASE("change collections must strictly decrease inside (-1,1)") {
  CHECK_THROWS_AS(ShapeConstraint(1, {-0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ShapeConstraint(1, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ShapeConstraint(0, {}), std::invalid_argument);
}

TEST_CASE("is_co_q_monotone on simple polynomials") {
  ChebPoly cube({0, 0.75, 0, 0.25});  // x^3
  ShapeReport r1 = is_co_q_monotone(cube, ShapeConstraint(1, {}), 128, 1e-10);
  CHECK(r1.feasible);  // (x^3)' = 3x^2 >= 0

  ChebPoly square({0.5, 0, 0.5});  // x^2
  ShapeReport r2 = is_co_q_monotone(square, ShapeConstraint(1, {}), 128, 1e-10);
  CHECK_FALSE(r2.feasible);  // derivative 2x < 0 left of 0
  CHECK(r2.witness < 0.0);

  // x^3 - x changes monotonicity exactly at +-1/sqrt(3).
  ChebPoly cubemx({0, -0.25, 0, 0.25});
  double y = 1.0 / std::sqrt(3.0);
  ShapeReport r3 = is_co_q_monotone(cubemx, ShapeConstraint(1, {y, -y}), 128, 1e-10);
  CHECK(r3.feasible);
  ShapeReport r4 = is_co_q_monotone(cubemx, ShapeConstraint(1, {}), 128, 1e-10);
  CHECK_FALSE(r4.feasible);
}

TEST_CASE("is_co_q_monotone at higher orders") {
  ChebPoly cube({0, 0.75, 0, 0.25});  // x^3: convexity changes at 0
  CHECK(is_co_q_monotone(cube, ShapeConstraint(2, {0.0}), 128, 1e-10).feasible);
  CHECK_FALSE(is_co_q_monotone(cube, ShapeConstraint(2, {}), 128, 1e-10).feasible);
  // Third derivative of x^3 is the positive constant 6.
  CHECK(is_co_q_monotone(cube, ShapeConstraint(3, {}), 128, 1e-10).feasible);
}
