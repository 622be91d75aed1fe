#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "spa/lp.hpp"
#include "support/simple_lp.hpp"

using namespace spa;

TEST_CASE("lp_solve: midpoint of two points") {
  // min t s.t. t >= 1-a, t >= a. Variables (a, t).
  std::vector<LpRow> rows{
      {{1.0, 1.0}, '>', 1.0},   // a + t >= 1
      {{-1.0, 1.0}, '>', 0.0},  // t - a >= 0
  };
  LpResult r = lp_solve(2, {0.0, 1.0}, rows);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Catch::Approx(0.5).margin(1e-10));
  CHECK(r.x[0] == Catch::Approx(0.5).margin(1e-10));
}

TEST_CASE("lp_solve: best constant for two samples") {
  // min t s.t. t >= |x_j - c| for x_j in {0, 1}. Variables (c, t).
  std::vector<LpRow> rows{
      {{-1.0, 1.0}, '>', 0.0},  // t >= c - 0
      {{1.0, 1.0}, '>', 0.0},   // t >= 0 - c
      {{-1.0, 1.0}, '>', -1.0}, // t >= c - 1
      {{1.0, 1.0}, '>', 1.0},   // t >= 1 - c
  };
  LpResult r = lp_solve(2, {0.0, 1.0}, rows);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Catch::Approx(0.5).margin(1e-10));
  CHECK(r.x[0] == Catch::Approx(0.5).margin(1e-10));
}

TEST_CASE("lp_solve: equality rows") {
  // min x + y s.t. x + y = 2, x - y <= 1, -x <= 0.
  std::vector<LpRow> rows{
      {{1.0, 1.0}, '=', 2.0},
      {{1.0, -1.0}, '<', 1.0},
      {{-1.0, 0.0}, '<', 0.0},
  };
  LpResult r = lp_solve(2, {1.0, 1.0}, rows);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Catch::Approx(2.0).margin(1e-10));
  CHECK(r.x[0] + r.x[1] == Catch::Approx(2.0).margin(1e-10));
}

TEST_CASE("lp_solve: infeasible detected") {
  std::vector<LpRow> rows{
      {{1.0}, '>', 2.0},
      {{1.0}, '<', 1.0},
  };
  LpResult r = lp_solve(1, {1.0}, rows);
  CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("lp_solve matches the independent reference solver") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> udist(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    // Minimax-style instance: nx free vars plus a level t, random residual
    // rows |a_i . x - b_i| <= t and a box |x_k| <= 2. 19 + 1 = 20 vars at the
    // largest trials.
    int nx = 3 + trial % 17;
    int nrows = 2 * nx + 10;
    int nv = nx + 1;
    std::vector<LpRow> rows;
    std::vector<std::vector<double>> Aref;
    std::vector<double> bref;
    auto add_le = [&](std::vector<double> a, double rhs) {
      Aref.push_back(a);
      bref.push_back(rhs);
      rows.push_back({std::move(a), '<', rhs});
    };
    for (int i = 0; i < nrows; ++i) {
      std::vector<double> a(static_cast<size_t>(nv), 0.0);
      for (int j = 0; j < nx; ++j) a[static_cast<size_t>(j)] = udist(rng);
      double b = udist(rng);
      // a.x - b <= t and b - a.x <= t
      std::vector<double> r1 = a, r2 = a;
      r1[static_cast<size_t>(nx)] = -1.0;
      add_le(r1, b);
      for (double& v : r2) v = -v;
      r2[static_cast<size_t>(nx)] = -1.0;
      add_le(r2, -b);
    }
    for (int j = 0; j < nx; ++j) {
      std::vector<double> box(static_cast<size_t>(nv), 0.0);
      box[static_cast<size_t>(j)] = 1.0;
      add_le(box, 2.0);
      for (double& v : box) v = -v;
      add_le(box, 2.0);
    }
    std::vector<double> obj(static_cast<size_t>(nv), 0.0);
    obj[static_cast<size_t>(nx)] = 1.0;

    LpResult mine = lp_solve(nv, obj, rows);
    REQUIRE(mine.status == LpStatus::Optimal);
    double ref = spa_test::reference_lp_min(Aref, bref, obj);
    REQUIRE_FALSE(std::isnan(ref));
    CHECK(mine.objective == Catch::Approx(ref).margin(1e-9));
  }
}

TEST_CASE("lp_solve is deterministic") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> udist(-1.0, 1.0);
  std::vector<LpRow> rows;
  for (int i = 0; i < 50; ++i) {
    std::vector<double> a(6);
    for (double& v : a) v = udist(rng);
    a[5] = -1.0;
    rows.push_back({a, '<', udist(rng)});
    for (double& v : a) v = -v;
    rows.push_back({a, '<', udist(rng) + 2.0});
  }
  std::vector<double> obj(6, 0.0);
  obj[5] = 1.0;
  LpResult a = lp_solve(6, obj, rows);
  LpResult b = lp_solve(6, obj, rows);
  REQUIRE(a.status == b.status);
  CHECK(a.objective == b.objective);  // bitwise
  CHECK(a.x == b.x);
  CHECK(a.pivots == b.pivots);
}
