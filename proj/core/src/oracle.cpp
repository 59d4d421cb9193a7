#include "gridtrail/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "gridtrail/clockwise.hpp"
#include "gridtrail/error.hpp"

namespace gridtrail {

namespace {

constexpr int kMaxDim = 8;

struct Lattice {
  int k = 0;
  int D = 1;
  std::vector<int> dims;
  std::vector<int> lo, hi;           // scaled bounds per axis
  std::vector<std::array<int, kMaxDim>> pts;
  std::vector<int> node_bit;         // -1 unless the point is a grid node
  std::vector<std::uint64_t> seg;    // node mask of segment (i, j), row-major
  std::vector<std::uint64_t> lines;  // maximal collinear node sets of size >= 2
  std::uint64_t full = 0;

  std::size_t size() const { return pts.size(); }
  std::uint64_t pair(std::size_t i, std::size_t j) const { return seg[i * pts.size() + j]; }
};

bool on_closed_segment(const int* p, const int* a, const int* b, int k) {
  for (int i = 0; i < k; ++i) {
    if (p[i] < std::min(a[i], b[i]) || p[i] > std::max(a[i], b[i])) return false;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const long long lhs = static_cast<long long>(p[i] - a[i]) * (b[j] - a[j]);
      const long long rhs = static_cast<long long>(p[j] - a[j]) * (b[i] - a[i]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool collinear3(const int* p, const int* a, const int* b, int k) {
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const long long lhs = static_cast<long long>(p[i] - a[i]) * (b[j] - a[j]);
      const long long rhs = static_cast<long long>(p[j] - a[j]) * (b[i] - a[i]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Lattice build_lattice(const SearchConfig& cfg) {
  Lattice L;
  L.k = static_cast<int>(cfg.dims.size());
  L.D = cfg.denominator;
  L.dims = cfg.dims;
  std::uint64_t count = 1;
  for (int a = 0; a < L.k; ++a) {
    L.lo.push_back(-cfg.margin * L.D);
    L.hi.push_back((cfg.dims[a] - 1 + cfg.margin) * L.D);
    count *= static_cast<std::uint64_t>(L.hi[a] - L.lo[a] + 1);
  }
  if (count > cfg.max_nodes || count * count > cfg.max_nodes) {
    throw ResourceError("lattice of " + std::to_string(count) + " points (" + std::to_string(count * count) +
                        " segments) exceeds the node limit " + std::to_string(cfg.max_nodes));
  }

  // Enumerate in lexicographic order, first axis most significant.
  std::array<int, kMaxDim> cur{};
  for (int a = 0; a < L.k; ++a) cur[a] = L.lo[a];
  for (std::uint64_t n = 0; n < count; ++n) {
    L.pts.push_back(cur);
    for (int a = L.k - 1; a >= 0; --a) {
      if (++cur[a] <= L.hi[a]) break;
      cur[a] = L.lo[a];
    }
  }

  std::vector<std::array<int, kMaxDim>> nodes;
  int nbits = 1;
  for (int d : cfg.dims) nbits *= d;
  for (const auto& p : L.pts) {
    int bit = 0;
    bool node = true;
    for (int a = 0; a < L.k; ++a) {
      if (p[a] % L.D != 0 || p[a] < 0 || p[a] > (cfg.dims[a] - 1) * L.D) {
        node = false;
        break;
      }
      bit = bit * cfg.dims[a] + p[a] / L.D;
    }
    L.node_bit.push_back(node ? bit : -1);
    if (node) nodes.push_back(p);
  }
  L.full = nbits == 64 ? ~0ULL : (1ULL << nbits) - 1;

  const std::size_t n = L.size();
  L.seg.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::uint64_t m = 0;
      for (std::size_t q = 0; q < n; ++q) {
        if (L.node_bit[q] < 0) continue;
        if (on_closed_segment(L.pts[q].data(), L.pts[i].data(), L.pts[j].data(), L.k)) m |= 1ULL << L.node_bit[q];
      }
      L.seg[i * n + j] = L.seg[j * n + i] = m;
    }
  }

  std::set<std::uint64_t> lines;
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    for (std::size_t v = u + 1; v < nodes.size(); ++v) {
      std::uint64_t m = 0;
      for (std::size_t w = 0; w < nodes.size(); ++w) {
        if (collinear3(nodes[w].data(), nodes[u].data(), nodes[v].data(), L.k)) {
          int bit = 0;
          for (int a = 0; a < L.k; ++a) bit = bit * cfg.dims[a] + nodes[w][a] / L.D;
          m |= 1ULL << bit;
        }
      }
      lines.insert(m);
    }
  }
  L.lines.assign(lines.begin(), lines.end());
  return L;
}

int lattice_index(const Lattice& L, const std::array<int, kMaxDim>& p) {
  int idx = 0;
  for (int a = 0; a < L.k; ++a) {
    if (p[a] < L.lo[a] || p[a] > L.hi[a]) return -1;
    idx = idx * (L.hi[a] - L.lo[a] + 1) + (p[a] - L.lo[a]);
  }
  return idx;
}

// Point permutation induced by each isometry of a cubic grid.
std::vector<std::vector<int>> lattice_isometries(const Lattice& L) {
  std::vector<std::vector<int>> out;
  const int two = 2 * L.D;
  for (const Isometry& g : enumerate_isometries(L.k)) {
    std::vector<int> map(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      std::array<int, kMaxDim> q{};
      for (int a = 0; a < L.k; ++a) {
        q[a] = L.pts[i][g.perm()[a]];
        if (g.flip()[a]) q[a] = two - q[a];
      }
      map[i] = lattice_index(L, q);
    }
    out.push_back(std::move(map));
  }
  return out;
}

bool cubic(const SearchConfig& cfg) {
  return std::all_of(cfg.dims.begin(), cfg.dims.end(), [](int d) { return d == 3; });
}

struct StartPoint {
  int index;
  std::uint64_t weight;
};

std::vector<StartPoint> start_points(const SearchConfig& cfg, const Lattice& L) {
  if (cfg.start) {
    std::array<int, kMaxDim> p{};
    for (int a = 0; a < L.k; ++a) p[a] = (*cfg.start)[a] * L.D;
    return {{lattice_index(L, p), 1}};
  }
  std::vector<StartPoint> out;
  if (cfg.symmetry && cubic(cfg)) {
    const auto maps = lattice_isometries(L);
    std::vector<bool> seen(L.size(), false);
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (seen[i]) continue;
      std::set<int> orbit;
      for (const auto& m : maps) orbit.insert(m[i]);
      for (int j : orbit) seen[j] = true;
      out.push_back({static_cast<int>(i), orbit.size()});
    }
    return out;
  }
  for (std::size_t i = 0; i < L.size(); ++i) out.push_back({static_cast<int>(i), 1});
  return out;
}

struct Task {
  int start;
  int first;
  std::uint64_t weight;
};

std::vector<Task> make_tasks(const Lattice& L, const std::vector<StartPoint>& starts) {
  std::vector<Task> tasks;
  for (const StartPoint& s : starts) {
    for (std::size_t j = 0; j < L.size(); ++j) {
      if (static_cast<int>(j) != s.index) tasks.push_back({s.index, static_cast<int>(j), s.weight});
    }
  }
  return tasks;
}

class Dfs {
 public:
  Dfs(const Lattice& L, int limit, int cap, bool counting)
      : L_(L), limit_(limit), cap_(cap), counting_(counting) {}

  // Returns true when a complete trail was found (search mode).
  bool run(const Task& t, const std::atomic<std::size_t>* best, std::size_t my_index) {
    best_ = best;
    my_index_ = my_index;
    path_.assign(1, t.start);
    std::array<int, kMaxDim> lo{}, hi{};
    for (int a = 0; a < L_.k; ++a) lo[a] = hi[a] = L_.pts[t.start][a];
    std::uint64_t cov = L_.node_bit[t.start] >= 0 ? 1ULL << L_.node_bit[t.start] : 0;
    return step(t.start, t.first, 0, cov, lo, hi);
  }

  const std::vector<int>& path() const { return path_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t explored() const { return explored_; }
  std::vector<std::vector<int>>* solutions = nullptr;

 private:
  bool step(int cur, int next, int depth, std::uint64_t cov, std::array<int, kMaxDim> lo,
            std::array<int, kMaxDim> hi) {
    for (int a = 0; a < L_.k; ++a) {
      const int v = L_.pts[next][a];
      lo[a] = std::min(lo[a], v);
      hi[a] = std::max(hi[a], v);
      if (hi[a] - lo[a] > cap_) return false;
    }
    cov |= L_.pair(cur, next);
    path_.push_back(next);
    const bool found = expand(next, depth + 1, cov, lo, hi);
    if (!found) path_.pop_back();
    return found;
  }

  bool expand(int cur, int depth, std::uint64_t cov, const std::array<int, kMaxDim>& lo,
              const std::array<int, kMaxDim>& hi) {
    ++explored_;
    const std::uint64_t unc = L_.full & ~cov;
    if (unc == 0) {
      if (!counting_) return true;
      if (depth == limit_) {
        ++count_;
        if (solutions) solutions->push_back(path_);
        return false;
      }
    }
    if (depth == limit_) return false;
    if (!counting_ && (explored_ & 1023) == 0 && best_ && best_->load(std::memory_order_relaxed) < my_index_) {
      return false;
    }
    if (unc != 0 && !bound_ok(cur, limit_ - depth, unc)) return false;
    const int n = static_cast<int>(L_.size());
    for (int j = 0; j < n; ++j) {
      if (j == cur) continue;
      if (step(cur, j, depth, cov, lo, hi)) return true;
    }
    return false;
  }

  // Each remaining segment covers the nodes of at most one grid line.
  bool bound_ok(int cur, int r, std::uint64_t unc) const {
    const int u = __builtin_popcountll(unc);
    if (u > 3 * r) return false;
    if (L_.node_bit[cur] >= 0 && u > 2 + 3 * (r - 1)) return false;
    int c3 = 0, c2 = 0;
    for (std::uint64_t line : L_.lines) {
      const int v = __builtin_popcountll(line & unc);
      if (v >= 3) ++c3;
      else if (v == 2) ++c2;
    }
    const int a = std::min(r, c3);
    const int b = std::min(r - a, c2);
    const int ub = 3 * a + 2 * b + (r - a - b);
    return ub >= u;
  }

  const Lattice& L_;
  int limit_;
  int cap_;
  bool counting_;
  const std::atomic<std::size_t>* best_ = nullptr;
  std::size_t my_index_ = 0;
  std::vector<int> path_;
  std::uint64_t count_ = 0;
  std::uint64_t explored_ = 0;
};

int scaled_cap(const SearchConfig& cfg) {
  Rational c = cfg.extent_cap * cfg.denominator;
  mpz_class f = c.get_num() / c.get_den();  // floor for non-negative values
  return static_cast<int>(std::min<long>(f.get_si(), 1L << 20));
}

Trail to_trail(const Lattice& L, const std::vector<int>& path) {
  Trail t{L.k, {}};
  for (int i : path) {
    Point p;
    for (int a = 0; a < L.k; ++a) p.emplace_back(L.pts[i][a], L.D);
    for (Rational& q : p) q.canonicalize();
    t.vertices.push_back(std::move(p));
  }
  return t;
}

template <typename F>
void run_parallel(std::size_t ntasks, unsigned workers, F&& body) {
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < ntasks; i = next++) body(i);
  };
  const unsigned w = std::max(1u, workers);
  if (w == 1) {
    loop();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < w; ++i) pool.emplace_back(loop);
  for (auto& th : pool) th.join();
}

}  // namespace

void SearchConfig::validate() const {
  if (dims.empty() || static_cast<int>(dims.size()) > kMaxDim) throw Error("search: 1 to 8 axes required");
  std::uint64_t n = 1;
  for (int d : dims) {
    if (d < 1 || d > 3) throw Error("search: grid sizes must be 1, 2 or 3 per axis");
    n *= static_cast<std::uint64_t>(d);
  }
  if (n > 64) throw Error("search: more than 64 grid nodes is not supported");
  if (margin < 0) throw Error("search: margin must be >= 0");
  if (denominator < 1) throw Error("search: denominator must be >= 1");
  if (budget < 1) throw Error("search: budget must be >= 1");
  if (extent_cap < 0) throw Error("search: extent cap must be >= 0");
  if (start) {
    if (start->size() != dims.size()) throw Error("search: start node has the wrong dimension");
    for (std::size_t a = 0; a < dims.size(); ++a) {
      if ((*start)[a] < 0 || (*start)[a] >= dims[a]) throw Error("search: start node outside the grid");
    }
  }
}

std::string SearchConfig::lattice_class() const {
  return "m=" + std::to_string(margin) + ",D=" + std::to_string(denominator);
}

SearchResult min_trail_search(const SearchConfig& cfg) {
  cfg.validate();
  const Lattice L = build_lattice(cfg);
  const std::vector<Task> tasks = make_tasks(L, start_points(cfg, L));
  const int cap = scaled_cap(cfg);
  SearchResult res;
  res.lattice_class = cfg.lattice_class();

  for (int limit = 1; limit <= cfg.budget; ++limit) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{none};
    std::vector<std::vector<int>> paths(tasks.size());
    std::atomic<std::uint64_t> explored{0};
    run_parallel(tasks.size(), cfg.workers, [&](std::size_t i) {
      if (best.load() < i) return;
      Dfs dfs(L, limit, cap, false);
      const bool found = dfs.run(tasks[i], &best, i);
      explored += dfs.explored();
      if (!found) return;
      paths[i] = dfs.path();
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    });
    res.explored += explored.load();
    if (best.load() != none) {
      res.trail = to_trail(L, paths[best.load()]);
      return res;
    }
    res.depth_exhausted = limit;
  }
  return res;
}

CountResult count_solutions(const SearchConfig& cfg, bool reduce_by_symmetry) {
  cfg.validate();
  if (reduce_by_symmetry && !cubic(cfg)) throw Error("symmetry reduction needs a 3 x ... x 3 grid");
  const Lattice L = build_lattice(cfg);
  SearchConfig c = cfg;
  if (reduce_by_symmetry) c.symmetry = true;
  const std::vector<Task> tasks = make_tasks(L, start_points(c, L));
  const int cap = scaled_cap(cfg);

  std::vector<std::uint64_t> counts(tasks.size(), 0);
  std::vector<std::vector<std::vector<int>>> sols(tasks.size());
  run_parallel(tasks.size(), cfg.workers, [&](std::size_t i) {
    Dfs dfs(L, cfg.budget, cap, true);
    if (reduce_by_symmetry) dfs.solutions = &sols[i];
    dfs.run(tasks[i], nullptr, i);
    counts[i] = dfs.count() * tasks[i].weight;
  });

  CountResult res;
  res.lattice_class = cfg.lattice_class();
  for (std::uint64_t n : counts) res.count += n;
  if (reduce_by_symmetry) {
    const auto maps = lattice_isometries(L);
    std::set<std::vector<int>> canon;
    for (const auto& bucket : sols) {
      for (const auto& s : bucket) {
        std::vector<int> best;
        for (const auto& m : maps) {
          std::vector<int> img(s.size());
          for (std::size_t q = 0; q < s.size(); ++q) img[q] = m[s[q]];
          if (best.empty() || img < best) best = img;
          std::reverse(img.begin(), img.end());
          if (img < best) best = img;
        }
        canon.insert(best);
      }
    }
    res.orbits = canon.size();
  }
  return res;
}

const char* to_string(StartStatus s) {
  switch (s) {
    case StartStatus::feasible: return "feasible";
    case StartStatus::infeasible_over_lattice: return "infeasible-over-lattice";
    case StartStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<Trail> start_seeds_3() {
  const Trail vertex = generate(3);
  const Trail edge_tail{2, {make_point({0, 0}), make_point({2, 2}), make_point({-1, 2}), make_point({2, -1}),
                            make_point({2, 1})}};
  const Trail edge = alternate_tail(vertex, edge_tail);
  // Found by randomized search over {-1..3}^3; starts at the face center (1,1,0).
  const Trail face{3,
                   {make_point({1, 1, 0}), make_point({3, -1, 0}), make_point({0, 2, 3}), make_point({0, 2, 0}),
                    make_point({0, -1, 3}), make_point({3, 2, 0}), make_point({0, -1, 0}), make_point({0, 2, 0}),
                    make_point({3, 2, 3}), make_point({0, -1, 0}), make_point({0, 2, 3}), make_point({3, 2, 0}),
                    make_point({0, 2, 0}), make_point({2, 0, 2})}};
  return {vertex, edge, face};
}

namespace {

void aggregate_classes(StartReport& r) {
  std::map<int, std::set<StartStatus>> seen;
  for (const auto& [n, s] : r.per_node) seen[classify_node(n)].insert(s);
  for (const auto& [c, ss] : seen) {
    r.per_class[c] = ss.size() == 1 ? *ss.begin() : StartStatus::unknown;
  }
}

}  // namespace

StartReport feasible_starts(int k, int budget, unsigned workers, int margin, int denominator) {
  if (k < 1) throw Error("feasible_starts: k must be >= 1");
  if (k > 3) {
    throw Error("feasible_starts: k > 3 is out of reach for exhaustive search; derive starts constructively "
                "with generate and alternate_tail");
  }
  StartReport r;
  r.k = k;
  r.budget = budget;
  const std::uint64_t n = node_count(k);
  if (k <= 2) {
    r.exhaustive = true;
    SearchConfig cfg;
    cfg.dims.assign(k, 3);
    cfg.budget = budget;
    cfg.workers = workers;
    cfg.margin = margin;
    cfg.denominator = denominator;
    r.lattice_class = cfg.lattice_class();
    for (std::uint64_t i = 0; i < n; ++i) {
      cfg.start = node_at(i, k);
      SearchResult s = min_trail_search(cfg);
      if (s.trail) {
        r.per_node[*cfg.start] = StartStatus::feasible;
        r.witness.emplace(*cfg.start, *s.trail);
      } else {
        r.per_node[*cfg.start] = StartStatus::infeasible_over_lattice;
      }
    }
    aggregate_classes(r);
    return r;
  }

  if (static_cast<std::uint64_t>(budget) != h_lower(3)) {
    throw Error("feasible_starts: the constructive k = 3 mode certifies budget " + std::to_string(h_lower(3)) +
                " only");
  }
  for (std::uint64_t i = 0; i < n; ++i) r.per_node[node_at(i, 3)] = StartStatus::unknown;
  const std::vector<Isometry> group = enumerate_isometries(3);
  for (const Trail& seed : start_seeds_3()) {
    const CoverageReport rep = verify_trail(seed);
    if (!rep.complete || !rep.box_ok || rep.segment_count != h_lower(3)) {
      throw Error("internal: start seed failed verification");
    }
    for (const Trail& oriented : {seed, seed.reversed()}) {
      for (const Isometry& g : group) {
        const Trail img = apply_isometry(g, oriented);
        const Point& p = img.vertices.front();
        Node node;
        bool is_node = true;
        for (const Rational& x : p) {
          if (!is_integer(x) || x < 0 || x > 2) {
            is_node = false;
            break;
          }
          node.push_back(static_cast<int>(x.get_num().get_si()));
        }
        if (!is_node || r.per_node[node] == StartStatus::feasible) continue;
        r.per_node[node] = StartStatus::feasible;
        r.witness.emplace(node, img);
      }
    }
  }
  aggregate_classes(r);
  return r;
}

StartReport feasible_starts(int k) {
  return feasible_starts(k, static_cast<int>(h_lower(k)));
}

}  // namespace gridtrail
