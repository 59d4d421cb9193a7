#include "gridtrail/trail.hpp"

#include "gridtrail/error.hpp"

namespace gridtrail {

std::vector<Segment> Trail::segments() const {
  std::vector<Segment> out;
  out.reserve(segment_count());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
  return out;
}

Trail Trail::reversed() const {
  Trail r{k, std::vector<Point>(vertices.rbegin(), vertices.rend())};
  return r;
}

void Trail::validate() const {
  if (k < 1) throw Error("trail dimension must be >= 1");
  if (vertices.size() < 2) throw Error("trail needs at least one segment");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (static_cast<int>(vertices[i].size()) != k) {
      throw Error("vertex " + std::to_string(i) + " has dimension " +
                  std::to_string(vertices[i].size()) + ", expected " + std::to_string(k));
    }
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw Error("vertices " + std::to_string(i - 1) + " and " + std::to_string(i) +
                  " coincide (zero-length segment)");
    }
  }
}

Trail apply_isometry(const Isometry& m, const Trail& t) {
  Trail out{t.k, {}};
  out.vertices.reserve(t.vertices.size());
  for (const Point& p : t.vertices) out.vertices.push_back(m.apply(p));
  return out;
}

std::vector<bool> coverage_bitmap(const std::vector<Segment>& segments, int k) {
  std::vector<bool> cov(node_count(k), false);
  for (const Segment& s : segments) {
    for (const Node& n : segment_grid_coverage(s, k)) cov[node_index(n)] = true;
  }
  return cov;
}

namespace {

Endpoint make_endpoint(const Point& p) {
  Endpoint e{p, std::nullopt};
  Node n;
  for (const Rational& c : p) {
    if (!is_integer(c) || c < 0 || c > 2) return e;
    n.push_back(static_cast<int>(c.get_num().get_si()));
  }
  e.node_class = classify_node(n);
  return e;
}

}  // namespace

CoverageReport verify_trail(const Trail& t, const Rational& box_extent) {
  t.validate();
  return verify_trail(t, std::vector<Rational>(t.k, box_extent));
}

CoverageReport verify_trail(const Trail& t, const std::vector<Rational>& box_extents) {
  t.validate();
  if (static_cast<int>(box_extents.size()) != t.k) {
    throw Error("box extent vector has " + std::to_string(box_extents.size()) +
                " entries, expected " + std::to_string(t.k));
  }
  CoverageReport r;
  r.segment_count = t.segment_count();
  const std::vector<bool> cov = coverage_bitmap(t.segments(), t.k);
  for (std::uint64_t i = 0; i < cov.size(); ++i) {
    (cov[i] ? r.covered : r.missing).push_back(node_at(i, t.k));
  }
  r.extents = aabb_extent(t.vertices);
  r.box_ok = true;
  for (int i = 0; i < t.k; ++i) {
    if (r.extents[i] > box_extents[i]) r.box_ok = false;
  }
  r.complete = r.missing.empty();
  r.start = make_endpoint(t.vertices.front());
  r.end = make_endpoint(t.vertices.back());
  return r;
}

std::uint64_t h_lower(int k) {
  if (k < 1) throw Error("h_lower: k must be >= 1");
  // ceil((3^k - 1) / 2); 3^k is odd so the division is exact.
  return (node_count(k) - 1) / 2;
}

std::uint64_t h_formula(int k) {
  if (k < 1) throw Error("h_formula: k must be >= 1");
  std::uint64_t h = 1;
  for (int i = 1; i < k; ++i) h = 3 * h + 1;
  return h;
}

Certificate optimality_certificate(const Trail& t) {
  CoverageReport r = verify_trail(t);
  if (!r.complete) {
    throw Error("not certifiable: trail misses " + std::to_string(r.missing.size()) + " node(s)");
  }
  if (!r.box_ok) throw Error("not certifiable: trail leaves the side-3 box");
  Certificate c;
  c.bound = h_lower(t.k);
  c.optimal = r.segment_count == c.bound;
  return c;
}

}  // namespace gridtrail
