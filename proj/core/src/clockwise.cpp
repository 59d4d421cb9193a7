#include "gridtrail/clockwise.hpp"

#include <algorithm>

#include "gridtrail/error.hpp"

namespace gridtrail {

namespace {

Point insert_coord(const Point& p, std::size_t axis, const Rational& v) {
  Point out = p;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(axis), v);
  return out;
}

Point drop_coord(const Point& p, std::size_t axis) {
  Point out = p;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(axis));
  return out;
}

void require_optimal(const Trail& c, const char* what) {
  const CoverageReport r = verify_trail(c);
  if (!r.complete) {
    throw Error(std::string(what) + " is incomplete: misses " + std::to_string(r.missing.size()) +
                " node(s)");
  }
  if (!r.box_ok) throw Error(std::string(what) + " leaves the side-3 box");
  if (r.segment_count != h_lower(c.k)) {
    throw Error(std::string(what) + " has " + std::to_string(r.segment_count) +
                " segments, expected " + std::to_string(h_lower(c.k)));
  }
}

bool is_vertex(const Point& p) {
  for (const Rational& x : p) {
    if (x != 0 && x != 2) return false;
  }
  return true;
}

// Flips that carry v0 to the origin, if the first segment then points along +(1,...,1).
std::optional<Isometry> diagonal_start(const Trail& c) {
  const Point& v0 = c.vertices[0];
  const Point& v1 = c.vertices[1];
  if (!is_vertex(v0)) return std::nullopt;
  std::vector<bool> flip(c.k);
  for (int i = 0; i < c.k; ++i) flip[i] = v0[i] == 2;
  std::vector<int> perm(c.k);
  for (int i = 0; i < c.k; ++i) perm[i] = i;
  Isometry m(perm, flip);
  const Point d = m.apply(v1);
  for (int i = 0; i < c.k; ++i) {
    if (d[i] <= 0 || d[i] != d[0]) return std::nullopt;
  }
  return m;
}

void check_output(const Trail& t, std::size_t expected) {
  const CoverageReport r = verify_trail(t);
  if (!r.complete || !r.box_ok || r.segment_count != expected) {
    throw Error("internal: lifted trail failed verification");
  }
}

}  // namespace

const char* LiftPlan::phase_of(std::size_t s) const {
  if (s >= forward_begin && s < forward_end) return "forward";
  if (s >= backward_begin && s < backward_end) return "backward";
  if (s == link) return "link";
  if (s >= final_begin && s < final_end) return "final";
  throw Error("segment index outside the lift plan");
}

Trail base_trail(int k) {
  if (k == 1) return Trail{1, {make_point({0}), make_point({2})}};
  if (k == 2) {
    return Trail{2, {make_point({0, 0}), make_point({0, 3}), make_point({3, 0}), make_point({0, 0}),
                     make_point({2, 2})}};
  }
  throw Error("base_trail: k must be 1 or 2");
}

std::vector<Point> swirl(int m) {
  if (m < 0) throw Error("swirl: negative dimension");
  if (m == 0) return {make_point({0}), make_point({3})};
  const std::vector<Point> w = swirl(m - 1);
  const std::size_t axis = static_cast<std::size_t>(m - 1);
  const Rational lo(-1), hi(2);
  std::vector<Point> z;
  z.reserve(3 * w.size() - 2);
  for (std::size_t i = 0; i < w.size(); ++i) z.push_back(insert_coord(w[i], axis, i % 2 ? hi : lo));
  for (std::size_t i = 1; i < w.size(); ++i) z.push_back(insert_coord(w[w.size() - 1 - i], axis, hi));
  for (std::size_t i = 1; i < w.size(); ++i) z.push_back(insert_coord(w[i], axis, i % 2 ? lo : hi));
  return z;
}

LiftResult lift_with_plan(const Trail& c) {
  c.validate();
  const int m = c.k;
  require_optimal(c, "input trail");
  if (!is_vertex(c.vertices.front()) && !is_vertex(c.vertices.back())) {
    throw Error("input trail has no endpoint at a class-0 vertex");
  }
  Trail oriented = c;
  std::optional<Isometry> iso = diagonal_start(oriented);
  if (!iso) {
    oriented = c.reversed();
    iso = diagonal_start(oriented);
  }
  if (!iso) {
    throw Error("input trail has no vertex endpoint whose segment runs along a main diagonal");
  }
  const Trail norm = apply_isometry(*iso, oriented);
  for (const Point& p : norm.vertices) {
    for (const Rational& x : p) {
      if (x < -1 || x > 2) throw Error("normalized input trail leaves [-1,2]^" + std::to_string(m));
    }
  }

  std::vector<Point> z = swirl(m);
  std::reverse(z.begin(), z.end());
  Trail out{m + 1, std::move(z)};
  for (std::size_t j = 1; j < norm.vertices.size(); ++j) {
    out.vertices.push_back(insert_coord(norm.vertices[j], static_cast<std::size_t>(m), Rational(0)));
  }
  Point start(static_cast<std::size_t>(m) + 1, Rational(0));
  start.back() = 2;
  out.vertices.front() = std::move(start);

  const std::size_t h = static_cast<std::size_t>(h_lower(m));
  check_output(out, 3 * h + 1);

  LiftPlan plan;
  plan.k = m + 1;
  plan.forward_begin = 0;
  plan.forward_end = h;
  plan.backward_begin = h;
  plan.backward_end = 2 * h;
  plan.link = 2 * h;
  plan.final_begin = 2 * h + 1;
  plan.final_end = 3 * h + 1;
  const std::vector<Segment> segs = out.segments();
  const std::vector<bool> before =
      coverage_bitmap(std::vector<Segment>(segs.begin(), segs.begin() + 2 * h), m + 1);
  for (const Node& n : segment_grid_coverage(segs[plan.link], m + 1)) {
    if (!before[node_index(n)]) ++plan.link_new_nodes;
  }
  return {std::move(out), plan};
}

Trail lift(const Trail& c) { return lift_with_plan(c).trail; }

namespace {

LiftResult generate_impl(int k, std::uint64_t max_nodes) {
  if (k < 1) throw Error("generate: k must be >= 1");
  if (k > 40 || node_count(k) > max_nodes) {
    throw ResourceError("generate: 3^" + std::to_string(k) + " nodes exceed the limit of " +
                        std::to_string(max_nodes));
  }
  if (k <= 2) return {base_trail(k), LiftPlan{}};
  LiftResult r{base_trail(2), LiftPlan{}};
  for (int d = 3; d <= k; ++d) r = lift_with_plan(r.trail);
  return r;
}

std::size_t constant_axis(const std::vector<Point>& pts) {
  std::optional<std::size_t> found;
  for (std::size_t a = 0; a < pts.front().size(); ++a) {
    bool same = std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return p[a] == pts.front()[a]; });
    if (!same) continue;
    if (found) throw Error("final phase lies in more than one axis hyperplane");
    found = a;
  }
  if (!found) throw Error("final phase is not contained in an axis hyperplane");
  return *found;
}

std::size_t final_start(const Trail& t) {
  t.validate();
  if (t.k < 2) throw Error("trail is not a lift output: dimension < 2");
  const std::size_t h = static_cast<std::size_t>(h_lower(t.k - 1));
  if (t.segment_count() != 3 * h + 1) throw Error("trail is not a lift output: wrong segment count");
  return 2 * h + 1;
}

}  // namespace

Trail generate(int k, std::uint64_t max_nodes) { return generate_impl(k, max_nodes).trail; }

LiftPlan generate_plan(int k, std::uint64_t max_nodes) {
  if (k < 3) throw Error("generate_plan: base trails (k <= 2) have no lift plan");
  return generate_impl(k, max_nodes).plan;
}

Trail alternate_tail(const Trail& t, const Trail& c_alt) {
  const std::size_t f = final_start(t);
  const std::vector<Point> tail(t.vertices.begin() + static_cast<std::ptrdiff_t>(f), t.vertices.end());
  const std::size_t axis = constant_axis(tail);
  const Rational level = tail.front()[axis];

  c_alt.validate();
  if (c_alt.k != t.k - 1) throw Error("replacement has dimension " + std::to_string(c_alt.k) +
                                      ", expected " + std::to_string(t.k - 1));
  require_optimal(c_alt, "replacement trail");

  std::vector<Point> e;
  for (const Point& p : c_alt.vertices) e.push_back(insert_coord(p, axis, level));
  const Point& j = tail.front();
  // j must equal e0 - lambda (e1 - e0) for some lambda > 0.
  const std::size_t k = static_cast<std::size_t>(t.k);
  std::optional<Rational> lambda;
  bool ok = j != e[0];
  for (std::size_t i = 0; i < k && ok; ++i) {
    const Rational d = e[1][i] - e[0][i];
    const Rational back = e[0][i] - j[i];
    if (d == 0) {
      ok = back == 0;
    } else if (!lambda) {
      lambda = back / d;
    } else {
      ok = *lambda == back / d;
    }
  }
  if (!ok || !lambda || *lambda <= 0) {
    throw Error("attachment mismatch: the final-phase start (vertex " + std::to_string(f) +
                ") does not lie on the backward extension of the replacement's first segment");
  }

  Trail out{t.k, std::vector<Point>(t.vertices.begin(), t.vertices.begin() + static_cast<std::ptrdiff_t>(f) + 1)};
  out.vertices.insert(out.vertices.end(), e.begin() + 1, e.end());
  const CoverageReport r = verify_trail(out);
  if (!r.complete || !r.box_ok || r.segment_count != h_lower(t.k)) {
    throw Error("replacement does not complete an optimal trail");
  }
  return out;
}

Trail final_copy(const Trail& t) {
  const std::size_t f = final_start(t);
  const std::vector<Point> tail(t.vertices.begin() + static_cast<std::ptrdiff_t>(f), t.vertices.end());
  const std::size_t axis = constant_axis(tail);
  Trail c{t.k - 1, {}};
  for (const Point& p : tail) c.vertices.push_back(drop_coord(p, axis));
  Point& s = c.vertices[0];
  const Point& next = c.vertices[1];
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Rational d = next[i] - s[i];
    if (d == 0) throw Error("final phase does not start along a main diagonal");
    s[i] += d > 0 ? 1 : -1;
  }
  return c;
}

}  // namespace gridtrail
