#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/hull_oracle.hpp"
#include "ttl/convexity.hpp"

using namespace ttl;

namespace {
Point pt(std::initializer_list<int> cs) {
  Point p;
  for (int c : cs) p.emplace_back(c);
  return p;
}
}  // namespace

TEST_CASE("orient follows the counterclockwise convention") {
  CHECK(orient({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == 1);
  CHECK(orient({pt({0, 0}), pt({0, 1}), pt({1, 0})}) == -1);
  CHECK(orient({pt({0, 0}), pt({1, 1}), pt({2, 2})}) == 0);
  CHECK(orient({pt({0}), pt({1})}) == 1);
  CHECK(orient({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}) == 1);
  CHECK_THROWS_AS(orient({pt({0, 0}), pt({1, 0})}), InvalidInput);
}

TEST_CASE("orient is antisymmetric under transpositions") {
  std::vector<Point> s = {pt({0, 0}), pt({3, 1}), pt({1, 4})};
  int base = orient(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto t = s;
      std::swap(t[i], t[j]);
      CHECK(orient(t) == -base);
    }
}

TEST_CASE("hull membership with witness coefficients") {
  std::vector<Point> tri = {pt({0, 0}), pt({1, 0}), pt({0, 1})};
  auto w = hull_membership({Rat(1, 3), Rat(1, 3)}, tri);
  REQUIRE(w.has_value());
  Rat total = 0;
  Point rebuilt = {Rat(0), Rat(0)};
  for (std::size_t i = 0; i < tri.size(); ++i) {
    CHECK(sign((*w)[i]) >= 0);
    total += (*w)[i];
    rebuilt[0] += (*w)[i] * tri[i][0];
    rebuilt[1] += (*w)[i] * tri[i][1];
  }
  CHECK(total == 1);
  CHECK(rebuilt[0] == Rat(1, 3));
  CHECK(rebuilt[1] == Rat(1, 3));

  CHECK_FALSE(hull_membership(pt({1, 1}), tri).has_value());
  CHECK(hull_membership(pt({5, 7}), {pt({5, 7})}).has_value());
  CHECK_THROWS_AS(hull_membership(pt({0, 0}), {}), InvalidInput);
}

TEST_CASE("hulls_intersect produces replayable witnesses") {
  auto r = hulls_intersect({{pt({0, 0})}, {pt({0, 0})}});
  REQUIRE(r.has_value());
  CHECK(r->point == pt({0, 0}));

  auto cross = hulls_intersect({{pt({0, 0}), pt({1, 1})}, {pt({1, 0}), pt({0, 1})}});
  REQUIRE(cross.has_value());
  CHECK(cross->point == Point{Rat(1, 2), Rat(1, 2)});
  for (const auto& fam : {std::vector<Point>{pt({0, 0}), pt({1, 1})},
                          std::vector<Point>{pt({1, 0}), pt({0, 1})}})
    CHECK(hull_membership(cross->point, fam).has_value());

  CHECK_FALSE(hulls_intersect({{pt({0})}, {pt({1})}}).has_value());
  CHECK_THROWS_AS(hulls_intersect({}), InvalidInput);
  CHECK_THROWS_AS(hulls_intersect({{pt({0})}, {}}), InvalidInput);
}

TEST_CASE("hulls_intersect is permutation invariant") {
  std::vector<Point> a = {pt({0, 0}), pt({2, 0}), pt({0, 2})};
  std::vector<Point> b = {pt({1, 1}), pt({3, 1}), pt({1, 3})};
  std::vector<Point> c = {pt({1, 0}), pt({1, 2})};
  bool base = hulls_intersect({a, b, c}).has_value();
  CHECK(hulls_intersect({c, a, b}).has_value() == base);
  std::vector<Point> a2 = {a[2], a[0], a[1]};
  CHECK(hulls_intersect({a2, b, c}).has_value() == base);
}

TEST_CASE("hulls_intersect matches the brute-force oracle on small planar inputs") {
  std::mt19937_64 rng(20240817);
  auto coin = [&](int lo, int hi) { return int(rng() % (hi - lo + 1)) + lo; };
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::vector<Point>> fams;
    int nf = coin(1, 3);
    for (int f = 0; f < nf; ++f) {
      std::vector<Point> fam;
      int np = coin(1, 5);
      for (int p = 0; p < np; ++p) fam.push_back(pt({coin(-4, 4), coin(-4, 4)}));
      fams.push_back(fam);
    }
    bool lp = hulls_intersect(fams).has_value();
    bool brute = oracle::families_intersect(fams);
    INFO("iteration " << iter);
    REQUIRE(lp == brute);
  }
}

TEST_CASE("affine dimension") {
  CHECK(affine_dim({pt({4, 5})}) == 0);
  CHECK(affine_dim({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == 2);
  CHECK(affine_dim({pt({0, 0}), pt({1, 1}), pt({2, 2})}) == 1);
  CHECK(affine_dim({pt({7}), pt({7})}) == 0);
  CHECK_THROWS_AS(affine_dim({}), InvalidInput);
}
