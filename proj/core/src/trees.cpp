#include "gridtrail/trees.hpp"

#include <algorithm>
#include <numeric>

#include "gridtrail/error.hpp"
#include "gridtrail/trail.hpp"

namespace gridtrail {

namespace {

// Exact intersection point of two non-parallel segments, if any.
std::optional<Point> intersection(const Segment& s, const Segment& t) {
  const std::size_t k = s.a().size();
  std::vector<Rational> u(k), v(k), w(k);
  for (std::size_t i = 0; i < k; ++i) {
    u[i] = s.b()[i] - s.a()[i];
    v[i] = t.b()[i] - t.a()[i];
    w[i] = t.a()[i] - s.a()[i];
  }
  // Solve a + x u = c + y v on the first pair of axes with a non-zero minor.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Rational det = u[j] * v[i] - u[i] * v[j];
      if (det == 0) continue;
      const Rational x = (w[j] * v[i] - w[i] * v[j]) / det;
      const Rational y = (u[i] * w[j] - u[j] * w[i]) / det;
      if (x < 0 || x > 1 || y < 0 || y > 1) return std::nullopt;
      Point p(k);
      for (std::size_t a = 0; a < k; ++a) {
        p[a] = s.a()[a] + x * u[a];
        if (p[a] != t.a()[a] + y * v[a]) return std::nullopt;
      }
      return p;
    }
  }
  return std::nullopt;  // parallel; shared endpoints are already vertices
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Point append(const Point& p, long w) {
  Point q = p;
  q.emplace_back(w);
  return q;
}

std::vector<Point> endpoints_sorted(const CoveringTree& t) {
  std::vector<Point> pts;
  for (const Segment& s : t.segments) {
    pts.push_back(s.a());
    pts.push_back(s.b());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

CoveringTree tree_from(int k, const std::vector<std::vector<long>>& raw) {
  CoveringTree t{k, {}};
  for (const auto& r : raw) {
    Point a, b;
    for (int i = 0; i < k; ++i) {
      a.emplace_back(r[i]);
      b.emplace_back(r[k + i]);
    }
    t.segments.emplace_back(std::move(a), std::move(b));
  }
  return t;
}

}  // namespace

const char* to_string(ContactRule r) { return r == ContactRule::junction ? "junction" : "arrangement"; }

ContactRule parse_contact_rule(const std::string& s) {
  if (s == "junction") return ContactRule::junction;
  if (s == "arrangement") return ContactRule::arrangement;
  throw Error("unknown contact rule '" + s + "' (expected junction or arrangement)");
}

CoveringTree apply_isometry(const Isometry& m, const CoveringTree& t) {
  CoveringTree out{t.k, {}};
  for (const Segment& s : t.segments) out.segments.push_back(m.apply(s));
  return out;
}

TreeReport verify_tree(const CoveringTree& t, ContactRule rule, const std::optional<std::vector<Rational>>& box) {
  if (t.k < 1) throw Error("tree dimension must be >= 1");
  if (t.segments.empty()) throw Error("tree has no segments");
  for (std::size_t i = 0; i < t.segments.size(); ++i) {
    if (t.segments[i].dim() != t.k) throw Error("segment " + std::to_string(i) + " has the wrong dimension");
  }
  const std::size_t n = t.segments.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (collinear_overlap(t.segments[i], t.segments[j])) {
        throw Error("segments " + std::to_string(i) + " and " + std::to_string(j) +
                    " overlap along a positive length");
      }
    }
  }

  TreeReport r;
  r.rule = rule;
  r.size = n;
  const std::vector<bool> cov = coverage_bitmap(t.segments, t.k);
  for (std::uint64_t i = 0; i < cov.size(); ++i) (cov[i] ? r.covered : r.missing).push_back(node_at(i, t.k));

  std::vector<Point> pts;
  for (const Segment& s : t.segments) {
    pts.push_back(s.a());
    pts.push_back(s.b());
  }
  r.extents = aabb_extent(pts);
  if (rule == ContactRule::arrangement) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (auto p = intersection(t.segments[i], t.segments[j])) pts.push_back(std::move(*p));
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  UnionFind uf(pts.size());
  std::size_t edges = 0;
  for (const Segment& s : t.segments) {
    std::optional<std::size_t> first;
    std::size_t on = 0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (!point_on_segment(pts[p], s)) continue;
      ++on;
      if (first) uf.unite(p, *first);
      else first = p;
    }
    edges += on - 1;
  }
  std::size_t comps = 0;
  for (std::size_t p = 0; p < pts.size(); ++p) comps += uf.find(p) == p;

  r.vertices = pts.size();
  r.edges = edges;
  r.components = comps;
  r.connected = comps == 1;
  r.acyclic = edges + comps == pts.size();
  const std::vector<Rational> limit = box ? *box : std::vector<Rational>(t.k, Rational(3));
  if (static_cast<int>(limit.size()) != t.k) throw Error("box extent vector has the wrong length");
  r.box_ok = true;
  for (int i = 0; i < t.k; ++i) r.box_ok = r.box_ok && r.extents[i] <= limit[i];
  return r;
}

CoveringTree partial_tree_3() {
  return tree_from(3, {
                          {0, 0, 0, 2, 0, 0},
                          {2, 0, 2, 2, 2, 0},
                          {0, 0, 1, 2, 0, 1},
                          {2, 0, -1, 2, 2, 1},
                          {1, 1, -1, 1, 1, 2},
                          {0, 1, 0, 0, 1, 2},
                          {0, 2, 1, 2, 2, 2},
                          {0, 2, 2, 2, 2, 0},
                          {1, 0, 2, 2, 0, -1},
                          {0, 2, 0, 1, 2, 2},
                          {0, 0, 1, 1, 2, 0},
                          {0, 1, 0, 2, 1, 2},
                      });
}

CoveringTree full_tree_3() {
  return tree_from(3, {
                          {1, -1, 2, 1, 3, 2},
                          {0, 0, 2, 1, 0, 0},
                          {1, 2, -1, 2, -1, 2},
                          {0, -1, -1, 0, 3, 3},
                          {1, 2, -1, 1, 2, 3},
                          {-1, 2, 0, 2, 2, 0},
                          {0, 0, 1, 3, 0, 1},
                          {0, 0, 3, 0, 3, 0},
                          {0, 1, 0, 3, 1, 0},
                          {0, 2, 2, 2, 0, 0},
                          {2, -1, 2, 2, 3, 2},
                          {2, -1, 1, 2, 2, 1},
                      });
}

CoveringTree replicate_tree(const CoveringTree& t, ContactRule rule) {
  const TreeReport in = verify_tree(t, rule);
  if (!in.is_tree()) throw Error("replicate_tree: input is not a tree under the " + std::string(to_string(rule)) + " rule");
  const std::size_t limit = 3 * t.segments.size() + 3;
  if (3 * t.segments.size() + 1 + 2 * in.missing.size() > limit) {
    throw Error("replicate_tree: input misses " + std::to_string(in.missing.size()) +
                " nodes; at most one can be absorbed within 3 t + 3 segments");
  }

  CoveringTree out{t.k + 1, {}};
  for (long w = 0; w <= 2; ++w) {
    for (const Segment& s : t.segments) out.segments.emplace_back(append(s.a(), w), append(s.b(), w));
  }
  const std::vector<Point> ends = endpoints_sorted(t);

  // Join the copies along the new axis at the first endpoint that keeps a tree.
  bool joined = false;
  for (const Point& q : ends) {
    CoveringTree trial = out;
    trial.segments.emplace_back(append(q, 0), append(q, 2));
    if (verify_tree(trial, rule).is_tree()) {
      out = std::move(trial);
      joined = true;
      break;
    }
  }
  if (!joined) throw Error("replicate_tree: no endpoint joins the three copies into a tree");

  for (const Node& m : in.missing) {
    const Point base = to_point(m);
    bool attached = false;
    for (const Point& p : ends) {
      CoveringTree trial = out;
      trial.segments.emplace_back(append(base, 0), append(base, 2));
      trial.segments.emplace_back(append(base, 0), append(p, 0));
      if (verify_tree(trial, rule).is_tree()) {
        out = std::move(trial);
        attached = true;
        break;
      }
    }
    if (!attached) {
      std::string where;
      for (int c : m) where += (where.empty() ? "" : ",") + std::to_string(c);
      throw Error("replicate_tree: cannot attach the new-axis line through (" + where + ")");
    }
  }

  const TreeReport rep = verify_tree(out, rule);
  if (!rep.is_tree() || !rep.covering()) throw Error("replicate_tree: result failed verification");
  return out;
}

TreeBounds tree_bounds(int k) {
  if (k < 1) throw Error("tree_bounds: k must be >= 1");
  auto pow3 = [](int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
    return r;
  };
  TreeBounds b;
  b.k = k;
  b.dt_upper = (pow3(k) - 1) / 2;
  if (k >= 3) {
    b.thm2_upper = (25 * pow3(k - 3) - 1) / 2;
    b.gap_lower = pow3(k - 3);
  }
  if (k >= 4) b.lemma1_upper = (pow3(k - 4) - 1) / 2 + 13 * pow3(k - 3);
  return b;
}

}  // namespace gridtrail
