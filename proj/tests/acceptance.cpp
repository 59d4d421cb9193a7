// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <gridtrail/clockwise.hpp>
#include <gridtrail/grid.hpp>
#include <gridtrail/oracle.hpp>
#include <gridtrail/serialize.hpp>
#include <gridtrail/trail.hpp>
#include <gridtrail/trees.hpp>

#include "support/random_trail.hpp"

using namespace gridtrail;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Outcome optimal_generation() {
  Outcome o;
  const std::uint64_t expect[] = {1, 4, 13, 40, 121, 364};
  const auto t0 = Clock::now();
  o.detail << "segments";
  for (int k = 1; k <= 6; ++k) {
    const CoverageReport r = verify_trail(generate(k));
    o.detail << (k == 1 ? " " : ",") << r.segment_count;
    o.expect(r.segment_count == expect[k - 1], "count k=" + std::to_string(k));
    o.expect(r.complete, "coverage k=" + std::to_string(k));
    o.expect(r.box_ok, "box k=" + std::to_string(k));
  }
  const double s = seconds_since(t0);
  o.detail << "; all complete inside the side-3 box; " << s << " s";
  o.expect(s < 10.0, "runtime >= 10 s");
  return o;
}

Outcome lower_bound() {
  Outcome o;
  SearchConfig c;
  c.budget = 3;
  const auto t0 = Clock::now();
  const SearchResult none = min_trail_search(c);
  const double s = seconds_since(t0);
  o.expect(!none.trail, "budget 3 found a trail");
  o.expect(s < 60.0, "budget 3 search took >= 60 s");
  c.budget = 4;
  const SearchResult found = min_trail_search(c);
  o.expect(found.trail.has_value(), "budget 4 found nothing");
  if (found.trail) {
    const CoverageReport r = verify_trail(*found.trail);
    o.expect(r.complete && r.box_ok && r.segment_count == 4, "budget 4 witness invalid");
  }
  o.detail << "3x3 budget 3: " << (none.trail ? "FOUND" : "NONE") << " (exhaustive over " << none.lattice_class
           << ", " << s << " s); budget 4: " << (found.trail ? "FOUND" : "NONE");
  return o;
}

Outcome start_map() {
  Outcome o;
  const StartReport r2 = feasible_starts(2);
  int feasible2 = 0;
  for (const auto& [n, s] : r2.per_node) {
    if (n == Node{1, 1}) o.expect(s == StartStatus::infeasible_over_lattice, "k=2 center");
    else feasible2 += s == StartStatus::feasible;
  }
  o.expect(feasible2 == 8, "k=2 non-center nodes");
  const StartReport r3 = feasible_starts(3);
  for (int c = 0; c <= 2; ++c) {
    o.expect(r3.per_class.at(c) == StartStatus::feasible, "k=3 " + class_name(c, 3));
  }
  o.expect(r3.per_class.at(3) == StartStatus::unknown, "k=3 center");
  for (const auto& [n, w] : r3.witness) {
    const CoverageReport rep = verify_trail(w);
    o.expect(w.vertices.front() == to_point(n) && rep.complete && rep.box_ok && rep.segment_count == 13,
             "k=3 witness " + node_to_string(n));
  }
  o.detail << "k=2: " << feasible2 << " feasible, (1,1) " << to_string(r2.per_node.at({1, 1})) << " over "
           << r2.lattice_class << "; k=3:";
  for (const auto& [c, s] : r3.per_class) o.detail << " " << class_name(c, 3) << " " << to_string(s) << ";";
  return o;
}

Outcome tree_results() {
  Outcome o;
  const ContactRule rule = ContactRule::arrangement;
  const TreeReport full = verify_tree(full_tree_3(), rule);
  o.expect(full.size == 12 && full.is_tree() && full.covering(), "full_tree_3");
  const TreeReport part = verify_tree(partial_tree_3(), rule);
  o.expect(part.size == 12 && part.is_tree() && part.covered.size() == 26, "partial_tree_3");
  const CoveringTree t4 = replicate_tree(partial_tree_3(), rule);
  const TreeReport r4 = verify_tree(t4, rule);
  o.expect(t4.k == 4 && r4.is_tree() && r4.covering(), "replicated G_4 tree");
  o.expect(r4.size <= 39 && r4.size < 40, "replicated size");
  o.detail << "contact rule " << to_string(rule) << "; full G_3: " << full.size << " edges, "
           << full.covered.size() << "/27; partial: " << part.size << " edges, " << part.covered.size()
           << "/27; replicated G_4: " << r4.size << " edges, " << r4.covered.size() << "/81";
  return o;
}

Outcome bounds_table() {
  Outcome o;
  for (int k = 3; k <= 8; ++k) {
    mpz_class p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, k - 3);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), 3, k);
    const TreeBounds b = tree_bounds(k);
    const std::string ks = "k=" + std::to_string(k);
    o.expect(b.dt_upper && *b.dt_upper == (pk - 1) / 2, ks + " h");
    o.expect(b.thm2_upper && *b.thm2_upper == (25 * p3 - 1) / 2, ks + " thm2");
    o.expect(b.gap_lower && *b.dt_upper - *b.thm2_upper == p3 && *b.gap_lower == p3, ks + " gap");
    if (k >= 4) {
      mpz_class p4;
      mpz_ui_pow_ui(p4.get_mpz_t(), 3, k - 4);
      o.expect(b.lemma1_upper && *b.lemma1_upper == (p4 - 1) / 2 + 13 * p3, ks + " lemma1");
    } else {
      o.expect(!b.lemma1_upper, ks + " lemma1 absent");
    }
  }
  const TreeBounds b4 = tree_bounds(4);
  o.expect(*b4.thm2_upper == 37 && *b4.lemma1_upper == 39 && *b4.dt_upper == 40, "k=4 spot values");
  o.detail << "k=3..8 match closed forms; k=4: thm2 " << b4.thm2_upper->get_str() << ", lemma1 "
           << b4.lemma1_upper->get_str() << ", h " << b4.dt_upper->get_str();
  return o;
}

Outcome property_suites() {
  Outcome o;
  // (a)
  std::mt19937 rng(20240611);
  int agree = 0;
  for (int i = 0; i < 10000; ++i) {
    const int k = 1 + i % 3;
    const naive::RandomTrail r = naive::random_trail(rng, k);
    const CoverageReport rep = verify_trail(r.trail);
    const auto hit = naive::coverage(r.scaled, k, r.D);
    const auto nodes = naive::grid(k, 1);
    std::vector<Node> expect;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      if (hit[q]) expect.push_back(Node(nodes[q].begin(), nodes[q].end()));
    }
    agree += rep.covered == expect && rep.box_ok == naive::extent_within(r.scaled, 3 * r.D);
  }
  o.expect(agree == 10000, "(a) " + std::to_string(10000 - agree) + " disagreements");

  // (b)
  const Trail c3 = generate(3);
  const CoverageReport base = verify_trail(c3);
  auto ext = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  int kept = 0;
  const auto group = enumerate_isometries(3);
  for (const Isometry& g : group) {
    const CoverageReport r = verify_trail(apply_isometry(g, c3));
    kept += r.segment_count == base.segment_count && r.complete && ext(r.extents) == ext(base.extents);
  }
  o.expect(group.size() == 48 && kept == 48, "(b)");

  // (c)
  bool same = true;
  for (int k = 1; k <= 6; ++k) {
    const std::string s = trail_to_json(generate(k));
    same = same && trail_to_json(trail_from_json(s)) == s;
  }
  for (int i = 0; i < 500; ++i) {
    const std::string s = trail_to_json(naive::random_trail(rng, 1 + i % 4).trail);
    same = same && trail_to_json(trail_from_json(s)) == s;
  }
  o.expect(same, "(c)");

  // (d)
  std::string first;
  bool stable = true;
  for (unsigned w : {1u, 2u, 8u}) {
    SearchConfig c;
    c.workers = w;
    std::string v;
    c.budget = 3;
    v += min_trail_search(c).trail ? "found;" : "none;";
    c.budget = 4;
    const SearchResult r = min_trail_search(c);
    v += r.trail ? trail_to_json(*r.trail) : "none";
    v += ";" + std::to_string(count_solutions(c, true).count);
    for (const auto& [n, s] : feasible_starts(2, 4, w).per_node) v += node_to_string(n) + to_string(s);
    if (first.empty()) first = v;
    stable = stable && v == first;
  }
  o.expect(stable, "(d)");
  o.detail << "(a) " << agree << "/10000 agree; (b) " << kept << "/48 isometries; (c) round trip "
           << (same ? "byte-identical" : "differs") << "; (d) workers 1,2,8 " << (stable ? "identical" : "differ");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"optimal generation k=1..6", optimal_generation},
      {"3x3 lower bound at desk scale", lower_bound},
      {"start-node map", start_map},
      {"covering trees", tree_results},
      {"bounds table", bounds_table},
      {"property suites", property_suites},
  };
  int failed = 0;
  int i = 0;
  for (const auto& [name, run] : criteria) {
    ++i;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("criterion %d %s: %s: %s\n", i, o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
