#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "spa/catalog.hpp"

using namespace spa;

namespace {

bool has_class(const TestFunction& f, int q, std::vector<double> ys) {
  for (const auto& c : f.shape_classes) {
    if (c.q != q || c.change_points.size() != ys.size()) continue;
    bool same = true;
    for (size_t i = 0; i < ys.size(); ++i)
      if (std::abs(c.change_points[i] - ys[i]) > 1e-12) same = false;
    if (same) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("monomial metadata") {
  TestFunction f = get_function("monomial", {{"k", "3"}});
  CHECK(f(0.5) == Catch::Approx(0.125));
  CHECK(has_class(f, 1, {}));
  CHECK(has_class(f, 2, {0.0}));
  CHECK(f.polynomial_degree == 3);
  CHECK(f.derivative(2)(0.5) == Catch::Approx(3.0));
}

TEST_CASE("op117 second derivative sign pattern") {
  TestFunction f = get_function("op117");
  CHECK(has_class(f, 2, {0.5, 0.0, -0.5}));
  auto d2 = f.derivative(2);
  for (double x : {-0.9, -0.3, 0.2, 0.7}) {
    CHECK(d2(x) == Catch::Approx(x * (x * x - 0.25)).margin(1e-12));
  }
  CHECK(f(0.5) == Catch::Approx(std::pow(0.5, 5) / 20 - std::pow(0.5, 3) / 24));
}

TEST_CASE("truncated power metadata") {
  TestFunction f = get_function("trunc", {{"m", "1"}, {"a", "0"}});
  CHECK(f(0.5) == 0.5);
  CHECK(f(-0.5) == 0.0);
  REQUIRE(f.kink_points.size() == 1);
  CHECK(f.kink_points[0] == 0.0);
  CHECK(f.sobolev_order == 1);
  CHECK(has_class(f, 1, {}));

  TestFunction g = get_function("trunc", {{"m", "2"}, {"a", "0.25"}});
  CHECK(g(0.75) == Catch::Approx(0.25));
  CHECK(has_class(g, 3, {0.25}));
  CHECK(g.derivative(1)(0.75) == Catch::Approx(1.0));
}

TEST_CASE("signed primitive is a polynomial member of its class") {
  TestFunction f = get_function("signed_primitive", {{"q", "2"}, {"ys", "0.5,-0.5"}});
  CHECK(f.polynomial_degree == 4);
  CHECK(has_class(f, 2, {0.5, -0.5}));
  // Second derivative is exactly (x-1/2)(x+1/2).
  auto d2 = f.derivative(2);
  CHECK(d2(0.8) == Catch::Approx((0.8 - 0.5) * (0.8 + 0.5)).margin(1e-12));
}

TEST_CASE("q3 family carries the third-derivative sign flip") {
  TestFunction f = get_function("q3_family", {{"y1", "0"}});
  CHECK(has_class(f, 3, {0.0}));
  CHECK(has_class(f, 2, {}));
  auto d3 = f.derivative(3);
  CHECK(d3(0.5) == Catch::Approx(2.0));
  CHECK(d3(-0.5) == Catch::Approx(-2.0));
  // f - f(-1) equals |x|^3/3 up to the integration constant.
  CHECK(f(0.5) - f(0.0) == Catch::Approx(std::pow(0.5, 3) / 3.0).margin(1e-12));
}

TEST_CASE("op117_pert keeps the coconvex sign pattern") {
  TestFunction f = get_function("op117_pert", {{"lambda", "0.7"}});
  CHECK(has_class(f, 2, {0.5, 0.0, -0.5}));
  auto d2 = f.derivative(2);
  for (double x : {-0.8, -0.3, 0.3, 0.8}) {
    double base = x * (x * x - 0.25);
    CHECK(d2(x) * base > 0.0);  // same sign as the unperturbed pattern
  }
}

TEST_CASE("every catalog entry constructs with its defaults") {
  for (const CatalogEntry& e : list_catalog()) {
    TestFunction f = get_function(e.id);
    CHECK(f.eval);
    CHECK(std::isfinite(f(0.3)));
    CHECK(std::isfinite(f.sup_norm_estimate));
  }
}

TEST_CASE("catalog listing is stable and contains the core ids") {
  auto entries = list_catalog();
  bool monomial = false, op117 = false;
  for (const auto& e : entries) {
    if (e.id == "monomial") monomial = true;
    if (e.id == "op117") op117 = true;
  }
  CHECK(monomial);
  CHECK(op117);
  auto again = list_catalog();
  REQUIRE(entries.size() == again.size());
  for (size_t i = 0; i < entries.size(); ++i) CHECK(entries[i].id == again[i].id);
}

TEST_CASE("derivative evaluators agree with central differences away from kinks") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> udist(-0.95, 0.95);
  for (const CatalogEntry& e : list_catalog()) {
    TestFunction f = get_function(e.id);
    if (f.r_max < 1) continue;
    auto d1 = f.derivative(1);
    int tested = 0;
    for (int trial = 0; tested < 100 && trial < 4000; ++trial) {
      double x = udist(rng);
      bool near_kink = false;
      for (double z : f.kink_points)
        if (std::abs(x - z) < 0.05) near_kink = true;
      if (near_kink) continue;
      ++tested;
      double h = 1e-5;
      double fd = (f(x + h) - f(x - h)) / (2 * h);
      double scale = std::max(1.0, f.sup_norm_estimate);
      CHECK(std::abs(fd - d1(x)) <= 1e-6 * scale * 10);
    }
  }
}

TEST_CASE("unknown ids and bad parameters are rejected") {
  CHECK_THROWS_AS(get_function("nope"), ConfigError);
  CHECK_THROWS_AS(get_function("trunc", {{"a", "1.5"}}), ConfigError);
  CHECK_THROWS_AS(get_function("monomial", {{"k", "40"}}), ConfigError);
  CHECK_THROWS_AS(get_function("monomial", {{"k", "2.5"}}), ConfigError);
  CHECK_THROWS_AS(get_function("shifted_power", {{"beta", "2.5"}}), ConfigError);
}

TEST_CASE("shifted power derivatives") {
  TestFunction f = get_function("shifted_power", {{"r", "1"}, {"beta", "0.5"}});
  auto d1 = f.derivative(1);
  CHECK(d1(0.0) == Catch::Approx(1.5 * std::pow(1.0, 0.5)));
  CHECK(f.sobolev_order == 1);
  CHECK(has_class(f, 1, {}));
  CHECK(has_class(f, 2, {}));
}
