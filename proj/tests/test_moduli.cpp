#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spa/catalog.hpp"
#include "spa/moduli.hpp"

using namespace spa;

TEST_CASE("omega_2 of x^2 is exactly 2 t^2") {
  TestFunction f = get_function("monomial", {{"k", "2"}});
  for (double t : {0.1, 0.5, 1.0}) {
    CHECK(omega_k(f, 2, t) == Catch::Approx(2 * t * t).epsilon(1e-10));
  }
}

TEST_CASE("omega_2 annihilates linear functions") {
  TestFunction f = make_test_function("lin", [](double x) { return 3.0 * x - 0.7; });
  for (double t : {0.1, 0.5, 1.0}) CHECK(omega_k(f, 2, t) <= 1e-12);
}

TEST_CASE("omega_2 of |x| is exactly 2t") {
  TestFunction f = get_function("abs");
  for (double t : {0.1, 0.5, 1.0}) {
    CHECK(omega_k(f, 2, t) == Catch::Approx(2 * t).epsilon(1e-10));
  }
}

TEST_CASE("omega_k is monotone in t") {
  TestFunction f = get_function("exp");
  double prev = 0.0;
  for (double t = 0.05; t <= 1.0; t += 0.05) {
    double w = omega_k(f, 2, t);
    CHECK(w + 1e-12 >= prev);
    prev = w;
  }
}

TEST_CASE("omega_k obeys the 2^k norm bound") {
  TestFunction f = get_function("xabsx");
  for (int k : {1, 2, 3}) {
    double w = omega_k(f, k, 2.0 / k - 1e-9);
    CHECK(w <= std::pow(2.0, k) * f.sup_norm_estimate + 1e-9);
  }
}

TEST_CASE("omega_k of a low-degree polynomial vanishes") {
  TestFunction f = make_test_function("quad", [](double x) { return 1 + x - x * x; });
  CHECK(omega_k(f, 3, 0.5) <= 1e-12);
}

TEST_CASE("domain guard: k*t must fit in the interval") {
  TestFunction f = get_function("exp");
  CHECK_THROWS_AS(omega_k(f, 3, 0.8), std::domain_error);
  CHECK_THROWS_AS(omega_k(f, 2, -0.1), std::invalid_argument);
}
