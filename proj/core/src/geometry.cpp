#include "gridtrail/geometry.hpp"

#include <algorithm>

#include "gridtrail/error.hpp"

namespace gridtrail {

Point make_point(std::initializer_list<long> coords) {
  Point p;
  p.reserve(coords.size());
  for (long c : coords) p.emplace_back(c);
  return p;
}

Point to_point(const Node& n) {
  Point p;
  p.reserve(n.size());
  for (int c : n) p.emplace_back(c);
  return p;
}

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty()) throw Error("segment endpoints must have dimension >= 1");
  if (a_.size() != b_.size()) throw Error("segment endpoints differ in dimension");
  if (a_ == b_) throw Error("zero-length segment");
}

namespace {

void require_dim(const Point& p, const Segment& s) {
  if (static_cast<int>(p.size()) != s.dim()) throw Error("dimension mismatch");
}

bool collinear_with(const Point& p, const Point& a, const Point& b) {
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if ((p[i] - a[i]) * (b[j] - a[j]) != (p[j] - a[j]) * (b[i] - a[i])) return false;
    }
  }
  return true;
}

}  // namespace

bool point_on_segment(const Point& p, const Segment& s) {
  require_dim(p, s);
  const Point& a = s.a();
  const Point& b = s.b();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& lo = a[i] < b[i] ? a[i] : b[i];
    const Rational& hi = a[i] < b[i] ? b[i] : a[i];
    if (p[i] < lo || p[i] > hi) return false;
  }
  return collinear_with(p, a, b);
}

std::vector<Node> segment_grid_coverage(const Segment& s, int k) {
  if (s.dim() != k) throw Error("dimension mismatch");
  const Point& a = s.a();
  const Point& b = s.b();
  std::size_t axis = 0;
  while (a[axis] == b[axis]) ++axis;
  const Rational span = b[axis] - a[axis];

  std::vector<Node> out;
  for (int v = 0; v <= 2; ++v) {
    Rational t = (Rational(v) - a[axis]) / span;
    if (t < 0 || t > 1) continue;
    Node n(k);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      Rational c = a[i] + t * (b[i] - a[i]);
      if (!is_integer(c) || c < 0 || c > 2) {
        ok = false;
      } else {
        n[i] = static_cast<int>(c.get_num().get_si());
      }
    }
    if (ok) out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> aabb_extent(const std::vector<Point>& points) {
  if (points.empty()) throw Error("aabb_extent of an empty point list");
  const std::size_t k = points.front().size();
  std::vector<Rational> lo = points.front(), hi = points.front();
  for (const Point& p : points) {
    if (p.size() != k) throw Error("aabb_extent: mixed dimensions");
    for (std::size_t i = 0; i < k; ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (p[i] > hi[i]) hi[i] = p[i];
    }
  }
  std::vector<Rational> ext(k);
  for (std::size_t i = 0; i < k; ++i) ext[i] = hi[i] - lo[i];
  return ext;
}

bool collinear_overlap(const Segment& s, const Segment& t) {
  if (s.dim() != t.dim()) throw Error("dimension mismatch");
  const Point& a = s.a();
  const Point& b = s.b();
  if (!collinear_with(t.a(), a, b) || !collinear_with(t.b(), a, b)) return false;
  // Parametrize along the first axis where s moves; s spans [0,1].
  std::size_t axis = 0;
  while (a[axis] == b[axis]) ++axis;
  const Rational span = b[axis] - a[axis];
  Rational u = (t.a()[axis] - a[axis]) / span;
  Rational v = (t.b()[axis] - a[axis]) / span;
  if (u > v) std::swap(u, v);
  Rational lo = u > 0 ? u : Rational(0);
  Rational hi = v < 1 ? v : Rational(1);
  return hi > lo;
}

}  // namespace gridtrail
