#include <catch2/catch_amalgamated.hpp>

#include "ttl/clique_cover.hpp"
#include "ttl/projective.hpp"

using namespace ttl;

TEST_CASE("abstract bound on a projective plane: tight decomposition") {
  auto inc = projective_plane(2);
  AbstractThrackle input;
  for (std::size_t p = 0; p < inc.n_points; ++p) input.W.push_back("p" + std::to_string(p));
  for (const auto& line : inc.lines) {
    std::vector<std::string> set;
    for (auto p : line) set.push_back("p" + std::to_string(p));
    input.sets.push_back(set);
  }
  auto report = abstract_transversal_bound(input);
  REQUIRE(report.transversal_ok);
  REQUIRE(report.cover.size() == 7);
  for (const auto& clique : report.cover) REQUIRE(clique.size() == 3);
  REQUIRE(report.cover_is_decomposition);
  REQUIRE(report.all_cliques_proper);
  REQUIRE(report.bound_holds);
  REQUIRE(report.m == report.w_size);
}

TEST_CASE("sunflower core induces an improper clique and the bound fails") {
  AbstractThrackle input;
  input.sets = {{"w", "a"}, {"w", "b"}, {"w", "c"}, {"w", "d"}};
  input.W = {"w"};
  auto report = abstract_transversal_bound(input);
  REQUIRE(report.transversal_ok);             // every pair meets W in exactly w
  REQUIRE(report.cover_is_decomposition);     // the one clique covers all pairs
  REQUIRE_FALSE(report.all_cliques_proper);   // but it is the whole family
  REQUIRE_FALSE(report.bound_holds);          // so m <= |W| genuinely fails
  REQUIRE(report.m == 4);
  REQUIRE(report.w_size == 1);
}

TEST_CASE("transversal violations are reported with the pair and count") {
  AbstractThrackle input;
  input.sets = {{"a", "b"}, {"a", "b", "c"}, {"c", "d"}};
  input.W = {"a", "b", "c", "d"};
  auto report = abstract_transversal_bound(input);
  REQUIRE_FALSE(report.transversal_ok);
  REQUIRE(report.violating_pair == std::make_pair<std::size_t, std::size_t>(0, 1));
  REQUIRE(report.violating_count == 2);
}

TEST_CASE("abstract bound input validation") {
  AbstractThrackle bad;
  bad.sets = {{"a"}, {"b"}};
  bad.W = {};
  REQUIRE_THROWS_AS(abstract_transversal_bound(bad), InvalidInput);
  bad.W = {"a", "a"};
  REQUIRE_THROWS_AS(abstract_transversal_bound(bad), InvalidInput);
  bad.W = {"a"};
  bad.sets = {{"a"}, {}};
  REQUIRE_THROWS_AS(abstract_transversal_bound(bad), InvalidInput);
  bad.sets = {{"a"}};
  REQUIRE_THROWS_AS(abstract_transversal_bound(bad), InvalidInput);
}

TEST_CASE("minimum proper clique decompositions of small complete graphs") {
  REQUIRE(min_clique_cover_bruteforce(3) == 3);
  REQUIRE(min_clique_cover_bruteforce(4) == 4);
  REQUIRE(min_clique_cover_bruteforce(5) == 5);
  REQUIRE_THROWS_AS(min_clique_cover_bruteforce(2), InvalidInput);
  REQUIRE_THROWS_AS(min_clique_cover_bruteforce(7), InvalidInput);
}

TEST_CASE("minimum decomposition of the six-vertex complete graph", "[slow]") {
  REQUIRE(min_clique_cover_bruteforce(6) == 6);
}
