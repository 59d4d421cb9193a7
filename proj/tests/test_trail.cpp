#include <doctest.h>

#include <gridtrail/clockwise.hpp>
#include <gridtrail/error.hpp>
#include <gridtrail/trail.hpp>

using namespace gridtrail;

namespace {

Trail t2(std::initializer_list<std::initializer_list<long>> vs) {
  Trail t{2, {}};
  for (auto v : vs) t.vertices.push_back(make_point(v));
  return t;
}

}  // namespace

TEST_CASE("verify a complete 3x3 trail") {
  const Trail t = t2({{0, 0}, {0, 3}, {3, 0}, {0, 0}, {2, 2}});
  const CoverageReport r = verify_trail(t);
  CHECK(r.segment_count == 4);
  CHECK(r.complete);
  CHECK(r.box_ok);
  CHECK(r.covered.size() == 9);
  CHECK(r.extents == std::vector<Rational>{3, 3});
  CHECK(r.start.node_class == 0);
  CHECK(r.end.node_class == 0);
}

TEST_CASE("missing nodes are listed") {
  const Trail t = t2({{0, 0}, {0, 2}, {2, 2}, {2, 0}});
  const CoverageReport r = verify_trail(t);
  CHECK_FALSE(r.complete);
  CHECK(r.missing == std::vector<Node>{{1, 0}, {1, 1}});
}

TEST_CASE("box checks use explicit extents") {
  const Trail t = t2({{-1, 0}, {3, 0}, {3, 2}});
  CHECK_FALSE(verify_trail(t).box_ok);
  CHECK(verify_trail(t, std::vector<Rational>{4, 3}).box_ok);
  CHECK_THROWS_AS(verify_trail(t, std::vector<Rational>{4}), Error);
}

TEST_CASE("endpoints off the grid have no class") {
  const Trail t{2, {Point{Rational(1, 2), 0}, make_point({2, 0})}};
  const CoverageReport r = verify_trail(t);
  CHECK_FALSE(r.start.node_class.has_value());
  CHECK(r.end.node_class == 0);
}

TEST_CASE("trail validation") {
  CHECK_THROWS_AS(verify_trail(Trail{2, {make_point({0, 0})}}), Error);
  CHECK_THROWS_AS(verify_trail(t2({{0, 0}, {0, 0}})), Error);
  CHECK_THROWS_AS(verify_trail(Trail{2, {make_point({0, 0}), make_point({1, 1, 1})}}), Error);
  CHECK_THROWS_AS(verify_trail(Trail{0, {}}), Error);
}

TEST_CASE("lower bound values") {
  const std::uint64_t expect[] = {1, 4, 13, 40, 121, 364, 1093, 3280};
  for (int k = 1; k <= 8; ++k) {
    CHECK(h_lower(k) == expect[k - 1]);
    CHECK(h_formula(k) == expect[k - 1]);
  }
  CHECK(h_lower(20) == 1743392200ULL);
  CHECK_THROWS_AS(h_lower(0), Error);
}

TEST_CASE("optimality certificate") {
  const Certificate c = optimality_certificate(t2({{0, 0}, {0, 3}, {3, 0}, {0, 0}, {2, 2}}));
  CHECK(c.optimal);
  CHECK(c.bound == 4);
  const Certificate d = optimality_certificate(t2({{0, 0}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 2}}));
  CHECK_FALSE(d.optimal);
  CHECK(d.bound == 4);
  CHECK_THROWS_WITH_AS(optimality_certificate(t2({{0, 0}, {2, 0}})), doctest::Contains("not certifiable"), Error);
}

TEST_CASE("reversal and coverage bitmap") {
  const Trail t = generate(3);
  const Trail r = t.reversed();
  CHECK(r.reversed() == t);
  CHECK(verify_trail(r).complete);
  const auto bits = coverage_bitmap(t.segments(), 3);
  CHECK(bits.size() == 27);
  CHECK(std::all_of(bits.begin(), bits.end(), [](bool b) { return b; }));
}
