#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gridtrail/geometry.hpp>

namespace gridtrail::cli {

struct RenderSpec {
  int axis_x = 0;
  int axis_y = 1;
  std::optional<int> layer_axis;  // one panel per value 0, 1, 2
};

// Segments are numbered from 1 in the order given. Throws Error on bad axes.
std::string render_svg(int k, const std::vector<Segment>& segments, const RenderSpec& spec);

}  // namespace gridtrail::cli
