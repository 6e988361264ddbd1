#include <catch2/catch_amalgamated.hpp>

#include "ttl/rational.hpp"

using namespace ttl;

TEST_CASE("rational strings parse and canonicalize") {
  CHECK(rat_to_string(rat_from_string("0")) == "0");
  CHECK(rat_to_string(rat_from_string("1/2")) == "1/2");
  CHECK(rat_to_string(rat_from_string("3/9")) == "1/3");
  CHECK(rat_to_string(rat_from_string("-4/2")) == "-2");
  CHECK(rat_to_string(rat_from_string("+7")) == "7");
  CHECK(rat_to_string(rat_from_string("2/-4")) == "-1/2");
  CHECK(rat_from_string("1/3") + rat_from_string("1/6") == Rat(1, 2));
}

TEST_CASE("malformed rational strings are rejected") {
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
  CHECK_THROWS_AS(rat_from_string(" 1"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/"), ParseError);
  CHECK_THROWS_AS(rat_from_string("/2"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(rat_from_string("a"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
}

TEST_CASE("floor and ceil agree with exact division") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_floor(Rat(6)) == 6);
  CHECK(rat_ceil(Rat(6)) == 6);
  CHECK(rat_ceil(Rat(1, 1000000)) == 1);
}

TEST_CASE("sign") {
  CHECK(sign(Rat(0)) == 0);
  CHECK(sign(Rat(-3, 7)) == -1);
  CHECK(sign(Rat(5)) == 1);
}
