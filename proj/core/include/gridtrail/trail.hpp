#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridtrail/geometry.hpp"
#include "gridtrail/grid.hpp"

namespace gridtrail {

struct Trail {
  int k = 0;
  std::vector<Point> vertices;

  std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Segment segment(std::size_t i) const { return Segment(vertices.at(i), vertices.at(i + 1)); }
  std::vector<Segment> segments() const;
  Trail reversed() const;

  // Throws Error unless k >= 1, at least one segment, uniform dimension,
  // and consecutive vertices distinct.
  void validate() const;

  friend bool operator==(const Trail& s, const Trail& t) {
    return s.k == t.k && s.vertices == t.vertices;
  }
};

Trail apply_isometry(const Isometry& m, const Trail& t);

struct Endpoint {
  Point point;
  std::optional<int> node_class;  // set when the point is a grid node
};

struct CoverageReport {
  std::size_t segment_count = 0;
  std::vector<Node> covered;  // sorted
  std::vector<Node> missing;  // sorted
  std::vector<Rational> extents;
  bool box_ok = false;
  bool complete = false;
  Endpoint start, end;
};

CoverageReport verify_trail(const Trail& t, const Rational& box_extent = 3);
CoverageReport verify_trail(const Trail& t, const std::vector<Rational>& box_extents);

// Coverage bitmap over all 3^k nodes, indexed by node_index.
std::vector<bool> coverage_bitmap(const std::vector<Segment>& segments, int k);

// (3^k - 1) / 2. Throws Error if k < 1.
std::uint64_t h_lower(int k);
std::uint64_t h_formula(int k);

struct Certificate {
  bool optimal = false;
  std::uint64_t bound = 0;
};

// Throws Error if the trail is incomplete or leaves the side-3 box.
Certificate optimality_certificate(const Trail& t);

}  // namespace gridtrail
