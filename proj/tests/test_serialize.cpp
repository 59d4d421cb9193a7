#include <doctest.h>

#include <gridtrail/clockwise.hpp>
#include <gridtrail/error.hpp>
#include <gridtrail/serialize.hpp>
#include <gridtrail/trees.hpp>

using namespace gridtrail;

TEST_CASE("trail json format") {
  const Trail t{2, {make_point({0, 0}), Point{Rational(3, 2), -1}}};
  CHECK(trail_to_json(t) == R"({"k":2,"vertices":[["0","0"],["3/2","-1"]]})");
}

TEST_CASE("trail json accepts integers and strings") {
  const Trail t = trail_from_json(R"({"k":2,"vertices":[[0,0],["6/4",-1]]})");
  CHECK(t.vertices[1][0] == Rational(3, 2));
  CHECK(trail_to_json(t) == R"({"k":2,"vertices":[["0","0"],["3/2","-1"]]})");
}

TEST_CASE("parse errors carry locations") {
  try {
    (void)trail_from_json("{\"k\":2,\n \"vertices\": [[0,0],");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.has_offset());
    CHECK(e.offset() > 0);
  }
  CHECK_THROWS_WITH_AS(trail_from_json(R"({"k":2,"vertices":[[0,0],[1]]})"), doctest::Contains("/vertices/1"),
                       ParseError);
  CHECK_THROWS_WITH_AS(trail_from_json(R"({"k":2,"vertices":[[0,0],["x",1]]})"),
                       doctest::Contains("/vertices/1/0"), ParseError);
  CHECK_THROWS_AS(trail_from_json(R"({"vertices":[[0,0],[1,1]]})"), ParseError);
  CHECK_THROWS_AS(trail_from_json(R"({"k":2,"vertices":[[0,0],[0,0]]})"), ParseError);
  CHECK_THROWS_AS(tree_from_json(R"({"k":2,"segments":[[[0,0]]]})"), ParseError);
}

TEST_CASE("tree json round trip") {
  for (const CoveringTree& t : {partial_tree_3(), full_tree_3()}) {
    const std::string s = tree_to_json(t);
    CHECK(tree_from_json(s) == t);
    CHECK(tree_to_json(tree_from_json(s)) == s);
  }
}

TEST_CASE("document detection") {
  CHECK(detect_document(trail_to_json(generate(2))) == DocumentKind::trail);
  CHECK(detect_document(tree_to_json(full_tree_3())) == DocumentKind::tree);
  CHECK_THROWS_AS(detect_document("[1,2]"), ParseError);
  CHECK_THROWS_AS(detect_document("{\"k\":1}"), ParseError);
}

TEST_CASE("report json is stable") {
  const Trail t = generate(3);
  CHECK(report_to_json(verify_trail(t)) == report_to_json(verify_trail(t)));
  const std::string r = report_to_json(verify_trail(t));
  CHECK(r.find("\"complete\":true") != std::string::npos);
  CHECK(r.find("\"segment_count\":13") != std::string::npos);
}

TEST_CASE("text forms") {
  CHECK(node_to_string({1, 0, 2}) == "(1,0,2)");
  CHECK(point_to_string(Point{Rational(-1, 2), 3}) == "(-1/2,3)");
}
