#include <doctest.h>

#include "weylmon/numeric.hpp"

using namespace weylmon;

TEST_CASE("determinant of small integer matrices") {
  CHECK(determinant({{Int(2), Int(-1)}, {Int(-1), Int(2)}}) == 3);
  CHECK(determinant({{Int(2), Int(-2)}, {Int(-2), Int(2)}}) == 0);
  CHECK(determinant({{Int(2), Int(-2)}, {Int(-3), Int(2)}}) == -2);
  CHECK(determinant({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
  CHECK(determinant(IntMat{}) == 1);
}

TEST_CASE("rank and pivot columns") {
  RatMat a = {{Rat(2), Rat(-2)}, {Rat(-2), Rat(2)}};
  CHECK(rational_rank(a) == 1);
  CHECK(pivot_columns(a) == std::vector<int>{0});
  RatMat b = {{Rat(1), Rat(0), Rat(2)}, {Rat(0), Rat(0), Rat(1)}};
  CHECK(pivot_columns(b) == std::vector<int>{0, 2});
}

TEST_CASE("solve_exact finds the unique solution and detects inconsistency") {
  RatMat a = {{Rat(2), Rat(-2)}, {Rat(-2), Rat(2)}, {Rat(0), Rat(1)}};
  // 2x - 2y = 0, -2x + 2y = 0, y = 3  => x = y = 3
  auto sol = solve_exact(a, {Rat(0), Rat(0), Rat(3)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 3);
  CHECK((*sol)[1] == 3);
  // 2x - 2y = 1 with -2x + 2y = 0 is inconsistent.
  CHECK_FALSE(solve_exact(a, {Rat(1), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("solve_exact against random integer systems") {
  // Fixed small cases with hand-checked solutions.
  RatMat a = {{Rat(1), Rat(2)}, {Rat(3), Rat(5)}};
  auto sol = solve_exact(a, {Rat(5), Rat(13)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 1);
  CHECK((*sol)[1] == 2);
}
