#include <doctest.h>

#include <gridtrail/error.hpp>
#include <gridtrail/serialize.hpp>
#include <gridtrail/trees.hpp>

#include <fstream>
#include <sstream>

using namespace gridtrail;

namespace {

Segment seg(std::initializer_list<long> a, std::initializer_list<long> b) { return Segment(make_point(a), make_point(b)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("contact rules differ on crossings") {
  // An X: two diagonals of the 3x3 square crossing at (1,1).
  const CoveringTree x{2, {seg({0, 0}, {2, 2}), seg({0, 2}, {2, 0})}};
  const TreeReport j = verify_tree(x, ContactRule::junction);
  CHECK_FALSE(j.connected);
  CHECK(j.components == 2);
  const TreeReport a = verify_tree(x, ContactRule::arrangement);
  CHECK(a.connected);
  CHECK(a.acyclic);
  CHECK(a.vertices == 5);
  CHECK(a.edges == 4);
}

TEST_CASE("T-junctions connect under both rules") {
  const CoveringTree t{2, {seg({0, 0}, {2, 0}), seg({1, 0}, {1, 2})}};
  for (ContactRule r : {ContactRule::junction, ContactRule::arrangement}) {
    const TreeReport rep = verify_tree(t, r);
    CHECK(rep.is_tree());
    CHECK(rep.covered.size() == 5);
  }
}

TEST_CASE("cycles are detected") {
  const CoveringTree tri{2, {seg({0, 0}, {2, 0}), seg({2, 0}, {0, 2}), seg({0, 2}, {0, 0})}};
  const TreeReport r = verify_tree(tri);
  CHECK(r.connected);
  CHECK_FALSE(r.acyclic);
}

TEST_CASE("overlaps are rejected") {
  const CoveringTree t{2, {seg({0, 0}, {2, 0}), seg({1, 0}, {3, 0})}};
  CHECK_THROWS_AS(verify_tree(t), Error);
  CHECK_THROWS_AS(verify_tree(CoveringTree{2, {}}), Error);
}

TEST_CASE("contact rule names") {
  CHECK(parse_contact_rule("junction") == ContactRule::junction);
  CHECK(parse_contact_rule("arrangement") == ContactRule::arrangement);
  CHECK(std::string(to_string(ContactRule::arrangement)) == "arrangement");
  CHECK_THROWS_AS(parse_contact_rule("x"), Error);
}

TEST_CASE("full G_3 tree") {
  const CoveringTree t = full_tree_3();
  const TreeReport r = verify_tree(t, ContactRule::arrangement);
  CHECK(r.size == 12);
  CHECK(r.is_tree());
  CHECK(r.covering());
  CHECK(r.extents == std::vector<Rational>{4, 4, 4});
  CHECK(tree_to_json(t) + "\n" == slurp(GOLDEN_DIR "/full_tree_3.json"));
  CHECK_FALSE(verify_tree(t, ContactRule::junction).connected);
}

TEST_CASE("partial G_3 tree") {
  const CoveringTree t = partial_tree_3();
  const TreeReport r = verify_tree(t, ContactRule::arrangement, std::vector<Rational>{2, 2, 3});
  CHECK(r.size == 12);
  CHECK(r.is_tree());
  CHECK(r.covered.size() == 26);
  CHECK(r.missing == std::vector<Node>{{0, 0, 2}});
  CHECK(r.box_ok);
  CHECK(r.extents == std::vector<Rational>{2, 2, 3});
  CHECK(tree_to_json(t) + "\n" == slurp(GOLDEN_DIR "/partial_tree_3.json"));
}

TEST_CASE("isometries keep tree reports") {
  const CoveringTree t = full_tree_3();
  const TreeReport base = verify_tree(t, ContactRule::arrangement);
  for (const Isometry& g : enumerate_isometries(3)) {
    const TreeReport r = verify_tree(apply_isometry(g, t), ContactRule::arrangement);
    CHECK(r.is_tree());
    CHECK(r.covering());
    CHECK(r.edges == base.edges);
    CHECK(r.vertices == base.vertices);
  }
}

TEST_CASE("replication") {
  const CoveringTree t4 = replicate_tree(partial_tree_3());
  const TreeReport r4 = verify_tree(t4, ContactRule::arrangement);
  CHECK(t4.k == 4);
  CHECK(r4.is_tree());
  CHECK(r4.covering());
  CHECK(r4.size == 39);
  CHECK(r4.size < 40);

  const CoveringTree t5 = replicate_tree(t4);
  const TreeReport r5 = verify_tree(t5, ContactRule::arrangement);
  CHECK(r5.is_tree());
  CHECK(r5.covering());
  CHECK(r5.size <= 3 * 39 + 3);
  CHECK(r5.size < 121);

  // A covering input needs only the connector.
  const CoveringTree f4 = replicate_tree(full_tree_3());
  CHECK(verify_tree(f4, ContactRule::arrangement).covering());
  CHECK(f4.segments.size() == 37);

  // Not a tree under the junction rule.
  CHECK_THROWS_AS(replicate_tree(full_tree_3(), ContactRule::junction), Error);
}

TEST_CASE("bounds") {
  const TreeBounds b1 = tree_bounds(1);
  CHECK(*b1.dt_upper == 1);
  CHECK_FALSE(b1.thm2_upper.has_value());
  CHECK_FALSE(b1.lemma1_upper.has_value());
  const TreeBounds b3 = tree_bounds(3);
  CHECK(*b3.thm2_upper == 12);
  CHECK(*b3.gap_lower == 1);
  CHECK_FALSE(b3.lemma1_upper.has_value());
  const TreeBounds b4 = tree_bounds(4);
  CHECK(*b4.dt_upper == 40);
  CHECK(*b4.thm2_upper == 37);
  CHECK(*b4.lemma1_upper == 39);
  CHECK(*b4.gap_lower == 3);
  CHECK(tree_bounds(60).dt_upper->get_str() == "21195579137608101757147216600");  // (3^60 - 1) / 2
  CHECK_THROWS_AS(tree_bounds(0), Error);
}
