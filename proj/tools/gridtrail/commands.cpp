#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include <gridtrail/clockwise.hpp>
#include <gridtrail/error.hpp>
#include <gridtrail/oracle.hpp>
#include <gridtrail/serialize.hpp>
#include <gridtrail/trees.hpp>

#include "svg.hpp"

namespace gridtrail::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) std::cout << text;
  else write_file(g.output, text);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size()) throw Error("invalid " + what + " '" + s + "'");
  return v;
}

std::vector<int> parse_ints(const std::string& s, char sep, const std::string& what) {
  std::vector<int> out;
  for (const std::string& part : split(s, sep)) out.push_back(parse_int(part, what));
  return out;
}

std::optional<std::vector<Rational>> parse_extent(const std::string& s, int k) {
  if (s.empty()) return std::nullopt;
  std::vector<Rational> out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_rational(part));
  if (out.size() == 1) out.assign(k, out.front());
  if (static_cast<int>(out.size()) != k) {
    throw Error("--extent needs 1 or " + std::to_string(k) + " values, got " + std::to_string(out.size()));
  }
  return out;
}

std::string join_nodes(const std::vector<Node>& ns) {
  std::string s;
  for (const Node& n : ns) s += (s.empty() ? "" : " ") + node_to_string(n);
  return s;
}

std::string join_extents(const std::vector<Rational>& e) {
  std::string s;
  for (const Rational& q : e) s += (s.empty() ? "" : ",") + to_string(q);
  return s;
}

std::string trail_csv(const Trail& t, const std::optional<LiftPlan>& plan) {
  std::ostringstream out;
  out << "vertex";
  for (int i = 1; i <= t.k; ++i) out << ",x" << i;
  if (plan) out << ",phase";
  out << "\n";
  for (std::size_t j = 0; j < t.vertices.size(); ++j) {
    out << j;
    for (const Rational& q : t.vertices[j]) out << "," << to_string(q);
    if (plan) out << "," << (j == 0 ? "start" : plan->phase_of(j - 1));
    out << "\n";
  }
  return out.str();
}

json phases_json(const LiftPlan& p) {
  // 1-based segment numbers, inclusive ranges.
  return {
      {"forward", {p.forward_begin + 1, p.forward_end}},
      {"backward", {p.backward_begin + 1, p.backward_end}},
      {"link", p.link + 1},
      {"final", {p.final_begin + 1, p.final_end}},
      {"link_new_nodes", p.link_new_nodes},
  };
}

// "x", "y", "z", "w" or a 0-based index.
int parse_axis(const std::string& s) {
  static const std::string names = "xyzw";
  if (s.size() == 1 && names.find(s[0]) != std::string::npos) return static_cast<int>(names.find(s[0]));
  return parse_int(s, "axis");
}

json mpz_json(const mpz_class& v) {
  if (v.fits_ulong_p()) return v.get_ui();
  return v.get_str();
}

}  // namespace

int cmd_gen(const Globals& g, const GenArgs& a) {
  if (a.k < 1) throw Error("gen: k must be >= 1");
  if (a.format != "json" && a.format != "csv") throw Error("gen: format must be json or csv");
  const Trail t = generate(a.k, g.max_nodes);
  const Certificate cert = optimality_certificate(t);
  std::optional<LiftPlan> plan;
  if (a.phases && a.k >= 3) plan = generate_plan(a.k, g.max_nodes);

  std::string body;
  if (a.format == "csv") {
    body = trail_csv(t, plan);
  } else if (plan) {
    json doc = json::parse(trail_to_json(t));
    doc["phases"] = phases_json(*plan);
    body = doc.dump() + "\n";
  } else {
    body = trail_to_json(t) + "\n";
  }
  const std::string summary = "k=" + std::to_string(a.k) + ": " + std::to_string(t.segment_count()) +
                              " segments, " + (cert.optimal ? "OPTIMAL" : "NOT OPTIMAL") + " (bound " +
                              std::to_string(cert.bound) + ")";

  if (g.json) {
    json doc = {{"k", a.k}, {"segments", t.segment_count()}, {"optimal", cert.optimal}, {"bound", cert.bound}};
    if (plan) doc["phases"] = phases_json(*plan);
    if (g.output.empty()) doc["trail"] = json::parse(trail_to_json(t));
    else write_file(g.output, body);
    std::cout << doc.dump() << "\n";
  } else if (g.output.empty()) {
    std::cout << body;
    std::cerr << summary << "\n";
  } else {
    write_file(g.output, body);
    std::cout << summary << "\n";
  }
  return cert.optimal ? kOk : kVerifyFailed;
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  const std::string text = read_file(a.path);
  if (detect_document(text) == DocumentKind::trail) {
    const Trail t = trail_from_json(text);
    const auto ext = parse_extent(a.extent, t.k);
    const CoverageReport r = ext ? verify_trail(t, *ext) : verify_trail(t);
    const bool ok = r.complete && r.box_ok;
    if (g.json) {
      json doc = {{"kind", "trail"}, {"ok", ok}, {"report", json::parse(report_to_json(r))}};
      emit(g, doc.dump() + "\n");
    } else {
      std::ostringstream out;
      auto ep = [&](const Endpoint& e) {
        return point_to_string(e.point) + (e.node_class ? " " + class_name(*e.node_class, t.k) : " (not a node)");
      };
      out << "segments: " << r.segment_count << "\n"
          << "covered: " << r.covered.size() << "/" << node_count(t.k) << "\n"
          << "extents: " << join_extents(r.extents) << (r.box_ok ? " (inside the box)" : " (outside the box)") << "\n"
          << "start: " << ep(r.start) << "\n"
          << "end: " << ep(r.end) << "\n";
      if (!r.missing.empty()) out << "missing: " << join_nodes(r.missing) << "\n";
      out << (ok ? "OK" : "FAILED") << "\n";
      emit(g, out.str());
    }
    return ok ? kOk : kVerifyFailed;
  }

  const CoveringTree t = tree_from_json(text);
  const auto ext = parse_extent(a.extent, t.k);
  const TreeReport r = verify_tree(t, parse_contact_rule(a.rule), ext);
  const bool ok = r.is_tree() && r.covering() && (!ext || r.box_ok);
  if (g.json) {
    json doc = {{"kind", "tree"}, {"ok", ok}, {"report", json::parse(report_to_json(r))}};
    emit(g, doc.dump() + "\n");
  } else {
    std::ostringstream out;
    out << "segments: " << r.size << "\n"
        << "covered: " << r.covered.size() << "/" << node_count(t.k) << "\n"
        << "contact rule: " << to_string(r.rule) << "\n"
        << "connected: " << (r.connected ? "yes" : "no") << " (" << r.components << " component(s))\n"
        << "acyclic: " << (r.acyclic ? "yes" : "no") << "\n"
        << "extents: " << join_extents(r.extents) << "\n";
    if (ext) out << "box: " << (r.box_ok ? "ok" : "violated") << "\n";
    if (!r.missing.empty()) out << "missing: " << join_nodes(r.missing) << "\n";
    out << (ok ? "OK" : "FAILED") << "\n";
    emit(g, out.str());
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_search(const Globals& g, const SearchArgs& a) {
  SearchConfig cfg;
  cfg.dims = parse_ints(a.grid, 'x', "grid");
  cfg.budget = a.budget;
  cfg.margin = a.margin;
  cfg.denominator = a.denominator;
  if (!a.start.empty()) cfg.start = parse_ints(a.start, ',', "start node");
  cfg.extent_cap = parse_rational(a.extent_cap);
  cfg.workers = a.workers;
  cfg.max_nodes = g.max_nodes;
  cfg.validate();

  json config = {{"grid", cfg.dims},         {"budget", cfg.budget},   {"margin", cfg.margin},
                 {"denominator", cfg.denominator}, {"extent_cap", to_string(cfg.extent_cap)},
                 {"workers", cfg.workers}};
  config["start"] = cfg.start ? json(*cfg.start) : json(nullptr);

  if (a.count) {
    const CountResult c = count_solutions(cfg, a.reduce);
    if (g.json) {
      json doc = {{"config", config}, {"verdict", c.count ? "FOUND" : "NONE"}, {"count", c.count},
                  {"lattice_class", c.lattice_class}};
      if (c.orbits) doc["orbits"] = *c.orbits;
      emit(g, doc.dump() + "\n");
    } else {
      std::string line = "COUNT " + std::to_string(c.count) + " (exactly " + std::to_string(cfg.budget) +
                         " segments over " + c.lattice_class + ")";
      if (c.orbits) line += ", " + std::to_string(*c.orbits) + " up to symmetry and reversal";
      emit(g, line + "\n");
    }
    return c.count ? kOk : kVerifyFailed;
  }

  const SearchResult r = min_trail_search(cfg);
  if (g.json) {
    json doc = {{"config", config},
                {"verdict", r.trail ? "FOUND" : "NONE"},
                {"lattice_class", r.lattice_class},
                {"depth_exhausted", r.depth_exhausted}};
    if (r.trail) doc["trail"] = json::parse(trail_to_json(*r.trail));
    emit(g, doc.dump() + "\n");
  } else if (r.trail) {
    std::string path;
    for (const Point& p : r.trail->vertices) path += (path.empty() ? "" : " -> ") + point_to_string(p);
    emit(g, "FOUND " + std::to_string(r.trail->segment_count()) + " segments over " + r.lattice_class + ": " + path +
                "\n");
  } else {
    emit(g, "NONE (exhaustive over " + r.lattice_class + "), budget " + std::to_string(cfg.budget) + "\n");
  }
  return r.trail ? kOk : kVerifyFailed;
}

int cmd_starts(const Globals& g, const StartsArgs& a) {
  if (a.k < 1) throw Error("starts: k must be >= 1");
  const int budget = a.budget ? *a.budget : static_cast<int>(h_lower(std::min(a.k, 40)));
  const StartReport r = feasible_starts(a.k, budget, a.workers, a.margin, a.denominator);
  if (g.json) {
    json nodes = json::array();
    for (const auto& [n, s] : r.per_node) {
      nodes.push_back({{"node", n}, {"class", classify_node(n)}, {"status", to_string(s)}});
    }
    json classes = json::object();
    for (const auto& [c, s] : r.per_class) classes[class_name(c, r.k)] = to_string(s);
    json doc = {{"k", r.k},         {"budget", r.budget}, {"mode", r.exhaustive ? "exhaustive" : "constructive"},
                {"nodes", nodes},   {"classes", classes}};
    doc["lattice_class"] = r.exhaustive ? json(r.lattice_class) : json(nullptr);
    emit(g, doc.dump() + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << "k=" << r.k << ", budget " << r.budget << ", "
      << (r.exhaustive ? "exhaustive over " + r.lattice_class : std::string("constructive (isometry transport)"))
      << "\n";
  for (const auto& [n, s] : r.per_node) {
    out << node_to_string(n) << " " << class_name(classify_node(n), r.k) << " " << to_string(s) << "\n";
  }
  for (const auto& [c, s] : r.per_class) out << class_name(c, r.k) << ": " << to_string(s) << "\n";
  emit(g, out.str());
  return kOk;
}

int cmd_tree(const Globals& g, const TreeArgs& a) {
  const ContactRule rule = parse_contact_rule(a.rule);
  CoveringTree t;
  if (a.which == "partial") {
    t = partial_tree_3();
  } else if (a.which == "full") {
    t = full_tree_3();
  } else if (a.which == "replicate") {
    if (a.times < 1) throw Error("tree: --times must be >= 1");
    t = a.input.empty() ? partial_tree_3() : tree_from_json(read_file(a.input));
    for (int i = 0; i < a.times; ++i) {
      if (node_count(t.k + 1) > g.max_nodes) throw ResourceError("tree: 3^" + std::to_string(t.k + 1) + " nodes exceed the limit");
      t = replicate_tree(t, rule);
    }
  } else {
    throw Error("tree: expected partial, full or replicate");
  }
  const TreeReport r = verify_tree(t, rule);
  const bool ok = r.is_tree() && (a.which == "partial" || r.covering());
  const std::string summary = a.which + ": k=" + std::to_string(t.k) + ", " + std::to_string(r.size) +
                              " segments, covers " + std::to_string(r.covered.size()) + "/" +
                              std::to_string(node_count(t.k)) + ", " + (r.is_tree() ? "tree" : "NOT a tree") +
                              " under the " + to_string(rule) + " rule, extents " + join_extents(r.extents);
  const std::string body = tree_to_json(t) + "\n";
  if (g.json) {
    json doc = {{"which", a.which}, {"ok", ok}, {"report", json::parse(report_to_json(r))}};
    if (g.output.empty()) doc["tree"] = json::parse(body);
    else write_file(g.output, body);
    std::cout << doc.dump() << "\n";
  } else if (g.output.empty()) {
    std::cout << body;
    std::cerr << summary << "\n";
  } else {
    write_file(g.output, body);
    std::cout << summary << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_bounds(const Globals& g, const BoundsArgs& a) {
  std::vector<int> ks;
  if (a.k) {
    if (*a.k < 1) throw Error("bounds: k must be >= 1");
    ks.push_back(*a.k);
  } else {
    if (a.upto < 1) throw Error("bounds: --upto must be >= 1");
    for (int k = 1; k <= a.upto; ++k) ks.push_back(k);
  }
  const std::string format = g.json ? "json" : a.format;
  if (format != "table" && format != "csv" && format != "json") throw Error("bounds: format must be table, csv or json");

  auto cell = [](const std::optional<mpz_class>& v) { return v ? v->get_str() : std::string(); };
  std::ostringstream out;
  json rows = json::array();
  if (format == "csv") out << "k,h,thm2_upper,lemma1_upper,gap_lower\n";
  if (format == "table") out << "k\th\tthm2\tlemma1\tgap>=\n";
  for (int k : ks) {
    const TreeBounds b = tree_bounds(k);
    if (format == "json") {
      json row = {{"k", k}};
      if (b.dt_upper) row["dt_upper"] = mpz_json(*b.dt_upper);
      if (b.thm2_upper) row["thm2_upper"] = mpz_json(*b.thm2_upper);
      if (b.lemma1_upper) row["lemma1_upper"] = mpz_json(*b.lemma1_upper);
      if (b.gap_lower) row["gap_lower"] = mpz_json(*b.gap_lower);
      rows.push_back(row);
    } else {
      const char sep = format == "csv" ? ',' : '\t';
      auto c = [&](const std::optional<mpz_class>& v) {
        const std::string s = cell(v);
        return format == "table" && s.empty() ? std::string("-") : s;
      };
      out << k << sep << c(b.dt_upper) << sep << c(b.thm2_upper) << sep << c(b.lemma1_upper) << sep << c(b.gap_lower)
          << "\n";
    }
  }
  emit(g, format == "json" ? rows.dump() + "\n" : out.str());
  return kOk;
}

int cmd_render(const Globals& g, const RenderArgs& a) {
  const std::string text = read_file(a.path);
  int k = 0;
  std::vector<Segment> segs;
  if (detect_document(text) == DocumentKind::trail) {
    const Trail t = trail_from_json(text);
    k = t.k;
    segs = t.segments();
  } else {
    const CoveringTree t = tree_from_json(text);
    k = t.k;
    segs = t.segments;
  }
  std::vector<int> axes;
  for (const std::string& part : split(a.axes, ',')) axes.push_back(parse_axis(part));
  if (axes.size() != 2) throw Error("render: --axes needs two comma-separated axis indices");
  RenderSpec spec;
  spec.axis_x = axes[0];
  spec.axis_y = k >= 2 ? axes[1] : 0;
  if (a.layers) spec.layer_axis = parse_axis(*a.layers);
  emit(g, render_svg(k, segs, spec));
  return kOk;
}

}  // namespace gridtrail::cli
