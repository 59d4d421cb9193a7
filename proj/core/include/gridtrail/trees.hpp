#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gridtrail/geometry.hpp"
#include "gridtrail/grid.hpp"

namespace gridtrail {

struct CoveringTree {
  int k = 0;
  std::vector<Segment> segments;

  friend bool operator==(const CoveringTree& s, const CoveringTree& t) {
    return s.k == t.k && s.segments == t.segments;
  }
};

CoveringTree apply_isometry(const Isometry& m, const CoveringTree& t);

// How two segments may touch.
//   junction:    shared endpoints and T-junctions (an endpoint interior to another
//                segment) connect; interior crossings do not.
//   arrangement: every common point is a vertex of the arrangement, so interior
//                crossings connect as well.
enum class ContactRule { junction, arrangement };

const char* to_string(ContactRule r);
ContactRule parse_contact_rule(const std::string& s);

struct TreeReport {
  std::size_t size = 0;
  std::vector<Node> covered;
  std::vector<Node> missing;
  std::vector<Rational> extents;
  std::size_t vertices = 0;  // points of the split graph
  std::size_t edges = 0;     // pieces after splitting every segment at those points
  std::size_t components = 0;
  bool connected = false;
  bool acyclic = false;
  bool box_ok = false;
  ContactRule rule = ContactRule::junction;

  bool is_tree() const { return connected && acyclic; }
  bool covering() const { return missing.empty(); }
};

// Throws Error on collinear overlap, empty input or mixed dimensions.
// box defaults to side 3 on every axis.
TreeReport verify_tree(const CoveringTree& t, ContactRule rule = ContactRule::junction,
                       const std::optional<std::vector<Rational>>& box = std::nullopt);

// Frozen constructions for G_3; both are trees under ContactRule::arrangement only.
// partial: 12 segments, 26 nodes, missing (0,0,2), inside [0,2]x[0,2]x[-1,2].
CoveringTree partial_tree_3();
// full: 12 segments, all 27 nodes, extents (4,4,4).
CoveringTree full_tree_3();

// Three copies of t at offsets 0, 1, 2 along a new last axis, one new-axis line
// through every node t misses, one new-axis connector at an endpoint of t and one
// in-copy connector per missing node. Throws Error if t is not a tree under rule
// or the result fails verification.
CoveringTree replicate_tree(const CoveringTree& t, ContactRule rule = ContactRule::arrangement);

struct TreeBounds {
  int k = 0;
  std::optional<mpz_class> dt_upper;      // h(k), k >= 1
  std::optional<mpz_class> lemma1_upper;  // k >= 4
  std::optional<mpz_class> thm2_upper;    // k >= 3
  std::optional<mpz_class> gap_lower;     // k >= 3
};

TreeBounds tree_bounds(int k);

}  // namespace gridtrail
