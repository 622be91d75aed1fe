#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "spa/theorems.hpp"

using namespace spa;

namespace {

CellSymbol parse_symbol(const std::string& tok) {
  if (tok == "+") return CellSymbol::Plus;
  if (tok == "o+") return CellSymbol::OPlus;
  if (tok == "o-") return CellSymbol::OMinus;
  if (tok == "*") return CellSymbol::PlusStar;
  if (tok == "~") return CellSymbol::OMinusTilde;
  throw std::logic_error("bad token " + tok);
}

// Expected rows given top-down (highest alpha row first), as printed.
void check_table(int s, const std::vector<std::string>& rows_top_down) {
  RegimeTable t = render_table(s);
  REQUIRE(t.num_rows == static_cast<int>(rows_top_down.size()));
  for (int r = 0; r < t.num_rows; ++r) {
    std::stringstream ss(rows_top_down[static_cast<size_t>(t.num_rows - 1 - r)]);
    std::string tok;
    int col = 0;
    while (ss >> tok) {
      REQUIRE(col < t.num_cols);
      INFO("s=" << s << " row=" << (r + 1) << " col=" << (col + 1));
      CHECK(t.cells[static_cast<size_t>(r)][static_cast<size_t>(col)] ==
            parse_symbol(tok));
      ++col;
    }
    REQUIRE(col == t.num_cols);
  }
}

}  // namespace

TEST_CASE("exceptional sets") {
  CHECK(exceptional_set(0).empty());
  CHECK(exceptional_set(1) == std::set<int>{2});
  CHECK(exceptional_set(2) == std::set<int>{1, 2, 4});
  CHECK(exceptional_set(3) == std::set<int>{1, 2, 4, 6});
  CHECK(exceptional_set(5) == std::set<int>{1, 2, 3, 4, 6, 8, 10});
}

TEST_CASE("classifier spot values") {
  CHECK(classify_regime(1.5, 1, 0) == Regime::Plus);
  CHECK(classify_regime(0.5, 3, 0) == Regime::OMinus);
  CHECK(classify_regime(3.5, 4, 1) == Regime::OPlus);
  CHECK(classify_regime(2.0, 1, 1) == Regime::OPlus);
  CHECK(classify_regime(1.5, 1, 1) == Regime::Plus);
}

TEST_CASE("classifier is total on a randomized sweep") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> adist(1e-6, 12.0);
  for (int i = 0; i < 2000; ++i) {
    double alpha = adist(rng);
    int N = 1 + static_cast<int>(rng() % 12);
    int s = static_cast<int>(rng() % 7);
    CHECK_NOTHROW(classify_regime(alpha, N, s));
  }
}

TEST_CASE("exceptional exponents never classify plus at small N") {
  for (int s = 1; s <= 6; ++s) {
    for (int a : exceptional_set(s)) {
      int ceil_half = (a + 1) / 2;
      for (int N = 1; N <= ceil_half; ++N) {
        CHECK(classify_regime(a, N, s) != Regime::Plus);
      }
    }
  }
}

TEST_CASE("monotone table, no change points") {
  check_table(0, {
                     "+ + + +",
                     "+ + + +",
                     "+ + + +",
                     "+ + o- o-",
                 });
}

TEST_CASE("table with one change point") {
  check_table(1, {
                     "+ + + +",
                     "+ + + o+",
                     "+ + + o+",
                     "* o+ o+ o-",
                     "+ o+ o- o-",
                 });
}

TEST_CASE("table with two change points") {
  check_table(2, {
                     "+ + + + +",
                     "+ + + + o+",
                     "+ + + + o+",
                     "* * o+ o+ o+",
                     "+ + o+ o+ o+",
                     "* o+ o+ o+ o-",
                     "* o+ o+ o- o-",
                 });
}

TEST_CASE("table with three change points") {
  check_table(3, {
                     "+ + + + + +",
                     "+ + + + + o+",
                     "+ + + + + o+",
                     "* * * o+ o+ o+",
                     "+ + + o+ o+ o+",
                     "* * o+ o+ o+ o+",
                     "+ + o+ o+ o+ o+",
                     "* o+ o+ o+ o+ o-",
                     "* o+ o+ o+ o- o-",
                 });
}

TEST_CASE("general table pattern at s=5") {
  check_table(5, {
                     "+ + + + + + + +",
                     "+ + + + + + + o+",
                     "* * * * * o+ o+ o+",
                     "* * * * o+ o+ o+ o+",
                     "* * * o+ o+ o+ o+ o+",
                     "* * o+ o+ o+ o+ o+ o+",
                     "* o+ o+ o+ o+ o+ ~ o-",
                 });
}

TEST_CASE("symbol renderings") {
  CHECK(cell_utf8(CellSymbol::Plus) == "+");
  CHECK(cell_token(CellSymbol::PlusStar) == "plus_star");
  CHECK(to_string(Regime::OMinus) == "ominus");
}
