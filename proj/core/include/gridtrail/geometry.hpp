#pragma once

#include <vector>

#include "gridtrail/rational.hpp"

namespace gridtrail {

using Point = std::vector<Rational>;
using Node = std::vector<int>;  // grid node, coordinates in {0,1,2}

Point make_point(std::initializer_list<long> coords);
Point to_point(const Node& n);

class Segment {
 public:
  // Throws Error on dimension mismatch, empty points or zero length.
  Segment(Point a, Point b);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  int dim() const { return static_cast<int>(a_.size()); }
  Segment reversed() const { return Segment(b_, a_); }

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a_ == t.a_ && s.b_ == t.b_;
  }

 private:
  Point a_, b_;
};

// Exact closed-segment membership.
bool point_on_segment(const Point& p, const Segment& s);

// Nodes of {0,1,2}^k on s, sorted lexicographically. At most three.
std::vector<Node> segment_grid_coverage(const Segment& s, int k);

// Per-axis max - min. Throws Error on empty input or mixed dimensions.
std::vector<Rational> aabb_extent(const std::vector<Point>& points);

// True when both segments lie on one line and share a positive-length piece.
bool collinear_overlap(const Segment& s, const Segment& t);

}  // namespace gridtrail
