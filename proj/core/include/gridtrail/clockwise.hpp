#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gridtrail/trail.hpp"

namespace gridtrail {

// Base trails: (0)->(2) for k = 1, (0,0)->(0,3)->(3,0)->(0,0)->(2,2) for k = 2.
Trail base_trail(int k);

// The zig-zag Z_m in m+1 dimensions, from (-1,...,-1,0) to (-1,...,-1,3) with 3^m
// segments. Z_0 = (0)->(3); Z_m interleaves three copies of Z_(m-1) along axis m.
std::vector<Point> swirl(int m);

// Segment index ranges [begin, end) of one lift output.
struct LiftPlan {
  int k = 0;  // output dimension
  std::size_t forward_begin = 0, forward_end = 0;
  std::size_t backward_begin = 0, backward_end = 0;
  std::size_t link = 0;
  std::size_t final_begin = 0, final_end = 0;
  std::size_t link_new_nodes = 0;  // nodes first covered by the link segment

  // "forward", "backward", "link" or "final".
  const char* phase_of(std::size_t segment) const;
};

struct LiftResult {
  Trail trail;
  LiftPlan plan;
};

// C(k-1) -> C(k) with 3 h(k-1) + 1 segments. The input is first moved by an
// isometry (and possibly reversed) so that it starts at the origin along the main
// diagonal; it must then fit inside [-1,2]^(k-1). Throws Error naming the failed
// precondition.
LiftResult lift_with_plan(const Trail& c);
Trail lift(const Trail& c);

// base_trail for k <= 2, iterated lift above. Throws ResourceError when 3^k exceeds
// max_nodes.
Trail generate(int k, std::uint64_t max_nodes = 1000000);
LiftPlan generate_plan(int k, std::uint64_t max_nodes = 1000000);

// Replaces the final phase of a lift output with c_alt, embedded in the same
// hyperplane. The attachment point (start of the final phase) must lie on the
// backward extension of c_alt's first segment. Throws Error otherwise or when the
// result is not an optimal trail.
Trail alternate_tail(const Trail& t, const Trail& c_alt);

// Final phase of a lift output projected back to k-1 dimensions (first vertex
// restored to the unextended start). alternate_tail(t, final_copy(t)) == t.
Trail final_copy(const Trail& t);

}  // namespace gridtrail
