#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <gridtrail/error.hpp>
#include <gridtrail/grid.hpp>

namespace gridtrail::cli {

namespace {

constexpr double kUnit = 60.0;
constexpr double kPad = 40.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double coord(const Point& p, int axis) { return axis < 0 ? 0.0 : p[axis].get_d(); }

struct Frame {
  double x0, y0;      // SVG offset of the panel
  double lo_x, lo_y;  // data coordinates mapped to the panel origin
  double hi_y;

  double sx(double x) const { return x0 + kPad + (x - lo_x) * kUnit; }
  double sy(double y) const { return y0 + kPad + (hi_y - y) * kUnit; }  // y grows upward
};

void panel(std::ostringstream& out, const Frame& f, int k, const std::vector<Segment>& segs, const RenderSpec& spec,
           std::optional<int> layer, double lo[2], double hi[2]) {
  const int ax = spec.axis_x;
  const int ay = k >= 2 ? spec.axis_y : -1;
  if (layer) {
    out << "<text x=\"" << fmt(f.x0 + kPad) << "\" y=\"" << fmt(f.y0 + kPad / 2) << "\" font-size=\"14\">axis "
        << *spec.layer_axis << " = " << *layer << "</text>\n";
  }
  out << "<rect x=\"" << fmt(f.sx(lo[0])) << "\" y=\"" << fmt(f.sy(hi[1])) << "\" width=\""
      << fmt((hi[0] - lo[0]) * kUnit) << "\" height=\"" << fmt((hi[1] - lo[1]) * kUnit)
      << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"6,4\"/>\n";

  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    const bool in_layer = !layer || (s.a()[*spec.layer_axis] == *layer && s.b()[*spec.layer_axis] == *layer);
    const double x1 = f.sx(coord(s.a(), ax)), y1 = f.sy(coord(s.a(), ay));
    const double x2 = f.sx(coord(s.b(), ax)), y2 = f.sy(coord(s.b(), ay));
    out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
        << "\" stroke=\"" << (in_layer ? "#c03" : "#ddd") << "\" stroke-width=\"2\"/>\n";
    if (in_layer) {
      out << "<text x=\"" << fmt((x1 + x2) / 2 + 4) << "\" y=\"" << fmt((y1 + y2) / 2 - 4)
          << "\" font-size=\"12\" fill=\"#c03\">" << i + 1 << "</text>\n";
    }
  }

  // Distinct projected grid positions.
  std::set<std::pair<int, int>> seen;
  for (std::uint64_t i = 0; i < node_count(k); ++i) {
    const Node n = node_at(i, k);
    if (layer && n[*spec.layer_axis] != *layer) continue;
    const std::pair<int, int> key{n[ax], ay < 0 ? 0 : n[ay]};
    if (!seen.insert(key).second) continue;
    out << "<circle cx=\"" << fmt(f.sx(key.first)) << "\" cy=\"" << fmt(f.sy(key.second))
        << "\" r=\"5\" fill=\"#222\"/>\n";
  }
}

}  // namespace

std::string render_svg(int k, const std::vector<Segment>& segs, const RenderSpec& spec) {
  if (k < 1) throw Error("render: dimension must be >= 1");
  if (k > 12) throw Error("render: dimension above 12 is not supported");
  auto bad = [k](int a) { return a < 0 || a >= k; };
  if (bad(spec.axis_x) || (k >= 2 && (bad(spec.axis_y) || spec.axis_x == spec.axis_y))) {
    throw Error("render: invalid projection axes");
  }
  if (spec.layer_axis) {
    if (k < 3) throw Error("render: layers need k >= 3");
    if (bad(*spec.layer_axis) || *spec.layer_axis == spec.axis_x || *spec.layer_axis == spec.axis_y) {
      throw Error("render: layer axis must differ from the projection axes");
    }
  }
  if (segs.empty()) throw Error("render: nothing to draw");

  const int ay = k >= 2 ? spec.axis_y : -1;
  double lo[2] = {0, 0}, hi[2] = {2, ay < 0 ? 0.0 : 2.0};
  for (const Segment& s : segs) {
    for (const Point* p : {&s.a(), &s.b()}) {
      lo[0] = std::min(lo[0], coord(*p, spec.axis_x));
      hi[0] = std::max(hi[0], coord(*p, spec.axis_x));
      lo[1] = std::min(lo[1], coord(*p, ay));
      hi[1] = std::max(hi[1], coord(*p, ay));
    }
  }
  const double pw = (hi[0] - lo[0]) * kUnit + 2 * kPad;
  const double ph = (hi[1] - lo[1]) * kUnit + 2 * kPad;
  const int panels = spec.layer_axis ? 3 : 1;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(pw * panels) << "\" height=\"" << fmt(ph)
      << "\" viewBox=\"0 0 " << fmt(pw * panels) << " " << fmt(ph) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int i = 0; i < panels; ++i) {
    out << "<g>\n";
    Frame f{pw * i, 0, lo[0], lo[1], hi[1]};
    panel(out, f, k, segs, spec, spec.layer_axis ? std::optional<int>(i) : std::nullopt, lo, hi);
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gridtrail::cli
