#include "gridtrail/serialize.hpp"

#include <json.hpp>

#include "gridtrail/error.hpp"

namespace gridtrail {

using nlohmann::json;

namespace {

json point_json(const Point& p) {
  json a = json::array();
  for (const Rational& c : p) a.push_back(to_string(c));
  return a;
}

json node_json(const Node& n) {
  json a = json::array();
  for (int c : n) a.push_back(c);
  return a;
}

json nodes_json(const std::vector<Node>& ns) {
  json a = json::array();
  for (const Node& n : ns) a.push_back(node_json(n));
  return a;
}

json rationals_json(const std::vector<Rational>& qs) { return point_json(qs); }

json endpoint_json(const Endpoint& e, int k) {
  json j = {{"point", point_json(e.point)}};
  if (e.node_class) {
    j["class"] = *e.node_class;
    j["class_name"] = class_name(*e.node_class, k);
  } else {
    j["class"] = nullptr;
  }
  return j;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann counts bytes from 1; report 0-based offsets.
    std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("JSON syntax error at byte " + std::to_string(off) + ": " + e.what(), off);
  }
}

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw ParseError("at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

int read_k(const json& doc) {
  if (!doc.is_object()) schema_error("", "expected an object");
  auto it = doc.find("k");
  if (it == doc.end()) schema_error("", "missing key \"k\"");
  if (!it->is_number_integer()) schema_error("/k", "expected an integer");
  long long k = it->get<long long>();
  if (k < 1 || k > 64) schema_error("/k", "dimension out of range [1,64]");
  return static_cast<int>(k);
}

Point read_point(const json& j, int k, const std::string& ptr) {
  if (!j.is_array()) schema_error(ptr, "expected an array of coordinates");
  if (static_cast<int>(j.size()) != k) {
    schema_error(ptr, "expected " + std::to_string(k) + " coordinates, got " + std::to_string(j.size()));
  }
  Point p;
  p.reserve(k);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& c = j[i];
    const std::string cp = ptr + "/" + std::to_string(i);
    if (c.is_string()) {
      try {
        p.push_back(parse_rational(c.get<std::string>()));
      } catch (const Error& e) {
        schema_error(cp, e.what());
      }
    } else if (c.is_number_integer()) {
      p.emplace_back(std::to_string(c.get<long long>()));
    } else {
      schema_error(cp, "expected a rational string");
    }
  }
  return p;
}

}  // namespace

std::string node_to_string(const Node& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

std::string point_to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

std::string trail_to_json(const Trail& t) {
  json v = json::array();
  for (const Point& p : t.vertices) v.push_back(point_json(p));
  return json{{"k", t.k}, {"vertices", v}}.dump();
}

std::string tree_to_json(const CoveringTree& t) {
  json s = json::array();
  for (const Segment& seg : t.segments) s.push_back(json::array({point_json(seg.a()), point_json(seg.b())}));
  return json{{"k", t.k}, {"segments", s}}.dump();
}

std::string report_to_json(const CoverageReport& r) {
  const int k = static_cast<int>(r.extents.size());
  json j = {
      {"segment_count", r.segment_count},
      {"covered", nodes_json(r.covered)},
      {"missing", nodes_json(r.missing)},
      {"extents", rationals_json(r.extents)},
      {"box_ok", r.box_ok},
      {"complete", r.complete},
      {"start", endpoint_json(r.start, k)},
      {"end", endpoint_json(r.end, k)},
  };
  return j.dump();
}

std::string report_to_json(const TreeReport& r) {
  json j = {
      {"size", r.size},
      {"covered", nodes_json(r.covered)},
      {"missing", nodes_json(r.missing)},
      {"extents", rationals_json(r.extents)},
      {"vertices", r.vertices},
      {"edges", r.edges},
      {"components", r.components},
      {"connected", r.connected},
      {"acyclic", r.acyclic},
      {"covering", r.covering()},
      {"box_ok", r.box_ok},
      {"rule", to_string(r.rule)},
  };
  return j.dump();
}

Trail trail_from_json(const std::string& text) {
  const json doc = parse_document(text);
  Trail t;
  t.k = read_k(doc);
  auto it = doc.find("vertices");
  if (it == doc.end()) schema_error("", "missing key \"vertices\"");
  if (!it->is_array()) schema_error("/vertices", "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    t.vertices.push_back(read_point((*it)[i], t.k, "/vertices/" + std::to_string(i)));
  }
  try {
    t.validate();
  } catch (const Error& e) {
    schema_error("/vertices", e.what());
  }
  return t;
}

CoveringTree tree_from_json(const std::string& text) {
  const json doc = parse_document(text);
  CoveringTree t;
  t.k = read_k(doc);
  auto it = doc.find("segments");
  if (it == doc.end()) schema_error("", "missing key \"segments\"");
  if (!it->is_array()) schema_error("/segments", "expected an array");
  if (it->empty()) schema_error("/segments", "a tree needs at least one segment");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string ptr = "/segments/" + std::to_string(i);
    const json& s = (*it)[i];
    if (!s.is_array() || s.size() != 2) schema_error(ptr, "expected [point, point]");
    Point a = read_point(s[0], t.k, ptr + "/0");
    Point b = read_point(s[1], t.k, ptr + "/1");
    if (a == b) schema_error(ptr, "zero-length segment");
    t.segments.emplace_back(std::move(a), std::move(b));
  }
  return t;
}

DocumentKind detect_document(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) schema_error("", "expected an object");
  const bool v = doc.contains("vertices");
  const bool s = doc.contains("segments");
  if (v && !s) return DocumentKind::trail;
  if (s && !v) return DocumentKind::tree;
  schema_error("", "expected exactly one of \"vertices\" or \"segments\"");
}

}  // namespace gridtrail
