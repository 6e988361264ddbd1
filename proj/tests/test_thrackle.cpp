#include <catch2/catch_amalgamated.hpp>

#include "ttl/thrackle.hpp"
#include "ttl/thrackle_examples.hpp"

using namespace ttl;

namespace {

ThrackleInstance single_segment() {
  ThrackleInstance instance;
  instance.dim = 2;
  instance.W.dim = 2;
  instance.W.points = {{"a", {Rat(0), Rat(0)}, {}}, {"b", {Rat(3), Rat(1)}, {}}};
  instance.V = {"a", "b"};
  instance.bodies = {{"a", "b"}};
  return instance;
}

}  // namespace

TEST_CASE("structural validation rejects malformed instances") {
  auto good = single_segment();
  REQUIRE_NOTHROW(validate_thrackle(good));

  auto bad = good;
  bad.bodies = {{"a"}};
  REQUIRE_THROWS_AS(validate_thrackle(bad), InvalidInput);

  bad = good;
  bad.bodies = {{"a", "b"}, {"b", "a"}};  // same hull twice
  REQUIRE_THROWS_AS(validate_thrackle(bad), InvalidInput);

  bad = good;
  bad.W.points.push_back({"c", {Rat(0), Rat(0)}, {}});  // duplicate coordinates
  REQUIRE_THROWS_AS(validate_thrackle(bad), InvalidInput);

  bad = good;
  bad.bodies = {{"a", "z"}};  // unknown vertex
  REQUIRE_THROWS_AS(validate_thrackle(bad), InvalidInput);

  bad = good;
  bad.dim = 4;
  REQUIRE_THROWS_AS(validate_thrackle(bad), InvalidInput);
}

TEST_CASE("duplicate hulls with different vertex lists are rejected") {
  ThrackleInstance instance;
  instance.dim = 2;
  instance.W.dim = 2;
  instance.W.points = {{"a", {Rat(0), Rat(0)}, {}},
                       {"m", {Rat(1), Rat(0)}, {}},
                       {"b", {Rat(2), Rat(0)}, {}}};
  instance.V = {"a", "m", "b"};
  instance.bodies = {{"a", "b"}, {"a", "m", "b"}};  // m lies on the segment
  REQUIRE_THROWS_AS(validate_thrackle(instance), InvalidInput);
}

TEST_CASE("transversal fails on disjoint and on overlapping pairs") {
  ThrackleInstance disjoint;
  disjoint.dim = 2;
  disjoint.W.dim = 2;
  disjoint.W.points = {{"a", {Rat(0), Rat(0)}, {}},
                       {"b", {Rat(1), Rat(0)}, {}},
                       {"c", {Rat(0), Rat(5)}, {}},
                       {"d", {Rat(1), Rat(5)}, {}}};
  disjoint.V = {"a", "b", "c", "d"};
  disjoint.bodies = {{"a", "b"}, {"c", "d"}};
  auto report = check_transversal(disjoint);
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.violating_pair == std::make_pair<std::size_t, std::size_t>(0, 1));
  REQUIRE(report.violating_count == 0);

  // two triangles sharing an edge hold both shared vertices
  ThrackleInstance shared;
  shared.dim = 2;
  shared.W.dim = 2;
  shared.W.points = {{"a", {Rat(0), Rat(0)}, {}},
                     {"b", {Rat(2), Rat(0)}, {}},
                     {"c", {Rat(1), Rat(2)}, {}},
                     {"d", {Rat(1), Rat(-2)}, {}}};
  shared.V = {"a", "b", "c", "d"};
  shared.bodies = {{"a", "b", "c"}, {"a", "b", "d"}};
  report = check_transversal(shared);
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.violating_count == 2);
}

TEST_CASE("single segment selects itself from both endpoints") {
  auto instance = single_segment();
  auto report = check_transversal(instance);
  REQUIRE(report.ok);  // no pairs to violate
  auto selection = vertex_selection(instance);
  validate_selection(instance, selection);
  REQUIRE(selection.selected.at("a") == 0);
  REQUIRE(selection.selected.at("b") == 0);
  REQUIRE(selection_surjective(instance, selection));
}

TEST_CASE("single triangle is selected by each of its vertices") {
  ThrackleInstance instance;
  instance.dim = 2;
  instance.W.dim = 2;
  instance.W.points = {{"a", {Rat(0), Rat(0)}, {}},
                       {"b", {Rat(4), Rat(0)}, {}},
                       {"c", {Rat(1), Rat(3)}, {}}};
  instance.V = {"a", "b", "c"};
  instance.bodies = {{"a", "b", "c"}};
  auto selection = vertex_selection(instance);
  validate_selection(instance, selection);
  REQUIRE(selection.selected.size() == 3);
  REQUIRE(selection_surjective(instance, selection));
}

TEST_CASE("two crossing segments: every endpoint selects its own segment") {
  std::vector<ConfigPoint> vertices = {
      {"s1a", {Rat(-2), Rat(0)}, {}}, {"s1b", {Rat(2), Rat(0)}, {}},
      {"s2a", {Rat(0), Rat(-2)}, {}}, {"s2b", {Rat(1), Rat(2)}, {}},
  };
  auto instance = segment_thrackle_from_chords(vertices, {{"s1a", "s1b"}, {"s2a", "s2b"}});
  REQUIRE(instance.W.size() == 5);  // one crossing added
  auto report = check_transversal(instance);
  REQUIRE(report.ok);
  auto selection = vertex_selection(instance);
  REQUIRE(selection.selected.at("s1a") == 0);
  REQUIRE(selection.selected.at("s2b") == 1);
  REQUIRE(selection_surjective(instance, selection));
}

TEST_CASE("collinear overlapping segments are rejected by the chord builder") {
  std::vector<ConfigPoint> vertices = {
      {"a", {Rat(0), Rat(0)}, {}}, {"b", {Rat(2), Rat(0)}, {}},
      {"c", {Rat(1), Rat(0)}, {}}, {"d", {Rat(3), Rat(0)}, {}},
  };
  REQUIRE_THROWS_AS(segment_thrackle_from_chords(vertices, {{"a", "b"}, {"c", "d"}}),
                    InvalidInput);
}

TEST_CASE("quadrilateral with exterior apex: selection is surjective") {
  auto instance = quad_apex_example();
  REQUIRE(instance.body_count() == 5);
  REQUIRE(instance.W.size() == 5);  // W equals V, nothing added
  auto report = check_transversal(instance);
  REQUIRE(report.ok);

  auto selection = vertex_selection(instance);
  validate_selection(instance, selection);
  // the two near vertices fall back to the apex segments after the wedge
  // competition, the far ones drop the wedge, and the apex picks one segment
  REQUIRE(selection.selected.at("q1") == 1);
  REQUIRE(selection.selected.at("q2") == 2);
  REQUIRE(selection.selected.at("q3") == 0);
  REQUIRE(selection.selected.at("q4") == 4);
  REQUIRE(selection.selected.at("apex") == 3);
  REQUIRE(selection_surjective(instance, selection));
  REQUIRE(selection.flags.size() == 4);  // q1..q4 each shared with the quad
}

TEST_CASE("heptagram: seven chords, transversal holds, selection surjective") {
  auto instance = heptagram_example();
  REQUIRE(instance.body_count() == 7);
  REQUIRE(instance.vertex_count() == 7);
  REQUIRE(instance.W.size() == 21);  // 7 vertices + 14 distinct crossings
  auto report = check_transversal(instance);
  REQUIRE(report.ok);
  auto selection = vertex_selection(instance);
  validate_selection(instance, selection);
  REQUIRE(selection.selected.size() == 7);
  REQUIRE(selection_surjective(instance, selection));
}

TEST_CASE("seven-gon triangles: all pairs intersect yet no transversal with W = V") {
  auto instance = seven_gon_example();
  REQUIRE(instance.body_count() == 21);
  REQUIRE(instance.vertex_count() == 7);
  for (std::size_t a = 0; a < 21; ++a)
    for (std::size_t b = a + 1; b < 21; ++b) {
      auto info = intersect_hulls_info(instance.body_points(a), instance.body_points(b));
      REQUIRE(info.dim >= 0);
    }
  auto report = check_transversal(instance);
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.violating_count >= 2);  // shared 7-gon edge carries two W points
}

TEST_CASE("octahedron: seven bodies on six vertices pass the transversal in space") {
  auto instance = octahedron_example();
  REQUIRE(instance.body_count() == 7);
  REQUIRE(instance.vertex_count() == 6);
  REQUIRE(instance.W.size() == 7);
  auto report = check_transversal(instance);
  REQUIRE(report.ok);
  // the planar selection machinery refuses spatial instances
  REQUIRE_THROWS_AS(vertex_selection(instance), PreconditionError);
}

TEST_CASE("selection preconditions: transversal failure and shared planar bodies") {
  ThrackleInstance disjoint;
  disjoint.dim = 2;
  disjoint.W.dim = 2;
  disjoint.W.points = {{"a", {Rat(0), Rat(0)}, {}},
                       {"b", {Rat(1), Rat(0)}, {}},
                       {"c", {Rat(0), Rat(5)}, {}},
                       {"d", {Rat(1), Rat(5)}, {}}};
  disjoint.V = {"a", "b", "c", "d"};
  disjoint.bodies = {{"a", "b"}, {"c", "d"}};
  REQUIRE_THROWS_AS(vertex_selection(disjoint), PreconditionError);

  // two 2-dimensional bodies sharing a vertex violate the hypotheses
  ThrackleInstance shared;
  shared.dim = 2;
  shared.W.dim = 2;
  shared.W.points = {{"a", {Rat(0), Rat(0)}, {}},  {"b", {Rat(4), Rat(0)}, {}},
                     {"c", {Rat(2), Rat(3)}, {}},  {"d", {Rat(-4), Rat(1)}, {}},
                     {"e", {Rat(-2), Rat(-3)}, {}}};
  shared.V = {"a", "b", "c", "d", "e"};
  shared.bodies = {{"a", "b", "c"}, {"a", "d", "e"}};
  REQUIRE_THROWS_AS(vertex_selection(shared), PreconditionError);
}

TEST_CASE("selection requires polygon vertices to be extreme") {
  ThrackleInstance instance;
  instance.dim = 2;
  instance.W.dim = 2;
  instance.W.points = {{"a", {Rat(0), Rat(0)}, {}},
                       {"b", {Rat(6), Rat(0)}, {}},
                       {"c", {Rat(0), Rat(6)}, {}},
                       {"m", {Rat(1), Rat(1)}, {}}};
  instance.V = {"a", "b", "c", "m"};
  instance.bodies = {{"a", "b", "c", "m"}};  // m is interior
  REQUIRE_THROWS_AS(vertex_selection(instance), PreconditionError);
}

TEST_CASE("random segment thrackles satisfy the hypotheses and the bound") {
  for (unsigned long long seed = 1; seed <= 10; ++seed) {
    auto instance = random_segment_thrackle(seed);
    auto report = check_transversal(instance);
    INFO("seed " << seed);
    REQUIRE(report.ok);
    auto selection = vertex_selection(instance);
    validate_selection(instance, selection);
    REQUIRE(selection_surjective(instance, selection));
    REQUIRE(instance.body_count() <= instance.W.size());
    REQUIRE(selection.flags.empty());
  }
}

TEST_CASE("random segment thrackles are deterministic in the seed") {
  auto a = random_segment_thrackle(42);
  auto b = random_segment_thrackle(42);
  REQUIRE(a.W.size() == b.W.size());
  for (std::size_t i = 0; i < a.W.size(); ++i) {
    REQUIRE(a.W.points[i].id == b.W.points[i].id);
    REQUIRE(a.W.points[i].coords == b.W.points[i].coords);
  }
  auto c = random_segment_thrackle(43);
  bool same = a.W.size() == c.W.size();
  if (same)
    for (std::size_t i = 0; i < a.W.size(); ++i)
      same = same && a.W.points[i].coords == c.W.points[i].coords;
  REQUIRE_FALSE(same);
}
