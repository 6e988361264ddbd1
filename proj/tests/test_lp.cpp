#include <catch2/catch_amalgamated.hpp>

#include "ttl/lp.hpp"

using namespace ttl;

TEST_CASE("feasibility of simple systems over nonnegative variables") {
  // x + y = 1 has nonnegative solutions
  LinearSystem sys(2);
  sys.add_row({Rat(1), Rat(1)}, Rel::Eq, Rat(1));
  auto p = lp_feasible_point(sys);
  REQUIRE(p.has_value());
  CHECK((*p)[0] + (*p)[1] == 1);
  CHECK(sign((*p)[0]) >= 0);
  CHECK(sign((*p)[1]) >= 0);

  // x + y = -1 cannot be met with x,y >= 0
  LinearSystem bad(2);
  bad.add_row({Rat(1), Rat(1)}, Rel::Eq, Rat(-1));
  CHECK_FALSE(lp_feasible_point(bad).has_value());
}

TEST_CASE("inequality rows") {
  // x <= 3, -x <= -2  ->  2 <= x <= 3
  LinearSystem sys(1);
  sys.add_row({Rat(1)}, Rel::Le, Rat(3));
  sys.add_row({Rat(-1)}, Rel::Le, Rat(-2));
  auto p = lp_feasible_point(sys);
  REQUIRE(p.has_value());
  CHECK((*p)[0] >= 2);
  CHECK((*p)[0] <= 3);
}

TEST_CASE("maximization with rational pivots") {
  // max x + y  s.t.  2x + y <= 4, x + 3y <= 6
  LinearSystem sys(2);
  sys.add_row({Rat(2), Rat(1)}, Rel::Le, Rat(4));
  sys.add_row({Rat(1), Rat(3)}, Rel::Le, Rat(6));
  auto res = lp_maximize(sys, {Rat(1), Rat(1)});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.value == Rat(14, 5));  // optimum at x=6/5, y=8/5
  CHECK(res.point[0] == Rat(6, 5));
  CHECK(res.point[1] == Rat(8, 5));
}

TEST_CASE("unbounded objective is reported") {
  LinearSystem sys(2);
  sys.add_row({Rat(1), Rat(-1)}, Rel::Le, Rat(0));
  auto res = lp_maximize(sys, {Rat(0), Rat(1)});
  CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("degenerate and redundant rows do not cycle") {
  // duplicate constraints plus an implied equality
  LinearSystem sys(3);
  sys.add_row({Rat(1), Rat(1), Rat(1)}, Rel::Eq, Rat(1));
  sys.add_row({Rat(1), Rat(1), Rat(1)}, Rel::Eq, Rat(1));
  sys.add_row({Rat(1), Rat(0), Rat(0)}, Rel::Le, Rat(0));
  auto p = lp_feasible_point(sys);
  REQUIRE(p.has_value());
  CHECK((*p)[0] == 0);
  CHECK((*p)[1] + (*p)[2] == 1);

  auto res = lp_maximize(sys, {Rat(0), Rat(1), Rat(0)});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.value == 1);
}

TEST_CASE("row width is validated") {
  LinearSystem sys(2);
  CHECK_THROWS_AS(sys.add_row({Rat(1)}, Rel::Eq, Rat(0)), InvalidInput);
}
