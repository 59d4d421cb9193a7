#include <doctest.h>

#include <algorithm>
#include <random>

#include <gridtrail/clockwise.hpp>
#include <gridtrail/grid.hpp>
#include <gridtrail/oracle.hpp>
#include <gridtrail/serialize.hpp>
#include <gridtrail/trail.hpp>

#include "support/random_trail.hpp"

using namespace gridtrail;

namespace {

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("verifier agrees with the naive coverage oracle") {
  std::mt19937 rng(20240611);
  int complete = 0;
  for (int i = 0; i < 10000; ++i) {
    const int k = 1 + i % 3;
    const naive::RandomTrail r = naive::random_trail(rng, k);
    const CoverageReport rep = verify_trail(r.trail);
    const auto hit = naive::coverage(r.scaled, k, r.D);
    const auto nodes = naive::grid(k, 1);
    std::vector<Node> expect;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      if (hit[q]) expect.push_back(Node(nodes[q].begin(), nodes[q].end()));
    }
    REQUIRE(rep.covered == expect);
    REQUIRE(rep.box_ok == naive::extent_within(r.scaled, 3 * r.D));
    REQUIRE(rep.complete == (expect.size() == nodes.size()));
    complete += rep.complete;
  }
  // The sample must exercise both outcomes.
  CHECK(complete > 0);
  CHECK(complete < 10000);
}

TEST_CASE("isometries of G_3 preserve C(3)") {
  const Trail c3 = generate(3);
  const CoverageReport base = verify_trail(c3);
  const auto group = enumerate_isometries(3);
  REQUIRE(group.size() == 48);
  for (const Isometry& g : group) {
    const Trail img = apply_isometry(g, c3);
    const CoverageReport r = verify_trail(img);
    CHECK(r.segment_count == base.segment_count);
    CHECK(r.complete);
    CHECK(r.box_ok);
    CHECK(sorted(r.extents) == sorted(base.extents));
    CHECK(apply_isometry(g.inverse(), img) == c3);
  }
}

TEST_CASE("trail json round trips byte for byte") {
  for (int k = 1; k <= 6; ++k) {
    const Trail t = generate(k);
    const std::string s = trail_to_json(t);
    CHECK(trail_from_json(s) == t);
    CHECK(trail_to_json(trail_from_json(s)) == s);
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Trail t = naive::random_trail(rng, 1 + i % 4).trail;
    const std::string s = trail_to_json(t);
    REQUIRE(trail_to_json(trail_from_json(s)) == s);
  }
}

TEST_CASE("oracle verdicts do not depend on the worker count") {
  std::optional<std::string> found4, none3;
  std::optional<std::uint64_t> count4;
  for (unsigned w : {1u, 2u, 8u}) {
    CAPTURE(w);
    SearchConfig c;
    c.workers = w;
    c.budget = 3;
    const SearchResult r3 = min_trail_search(c);
    CHECK_FALSE(r3.trail.has_value());
    c.budget = 4;
    const SearchResult r4 = min_trail_search(c);
    REQUIRE(r4.trail.has_value());
    const std::string s = trail_to_json(*r4.trail);
    if (!found4) found4 = s;
    CHECK(s == *found4);
    const std::uint64_t n = count_solutions(c, true).count;
    if (!count4) count4 = n;
    CHECK(n == *count4);

    const StartReport starts = feasible_starts(2, 4, w);
    std::string map;
    for (const auto& [node, st] : starts.per_node) map += node_to_string(node) + to_string(st) + ";";
    if (!none3) none3 = map;
    CHECK(map == *none3);
  }
}
