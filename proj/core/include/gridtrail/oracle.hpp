#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridtrail/trail.hpp"

namespace gridtrail {

struct SearchConfig {
  std::vector<int> dims{3, 3};  // nodes per axis, each 1..3
  int margin = 1;               // lattice {-m, ..., n-1+m} per axis
  int denominator = 1;          // turning points on multiples of 1/D
  int budget = 4;               // maximum segments
  std::optional<Node> start;    // fixed first vertex
  Rational extent_cap = 3;      // per-axis vertex extent
  unsigned workers = 1;
  bool symmetry = true;         // orbit reduction of start points (cubic grids, free start)
  std::uint64_t max_nodes = 1000000;  // cap on lattice points squared

  // Throws Error when a field is out of range.
  void validate() const;
  // "m=1,D=1"
  std::string lattice_class() const;
};

struct SearchResult {
  std::optional<Trail> trail;   // first trail found in canonical order
  int depth_exhausted = 0;      // every budget <= this value has no solution
  std::uint64_t explored = 0;   // DFS nodes expanded (varies with worker count)
  std::string lattice_class;
};

// Iterative deepening over budgets 1..cfg.budget. Throws ResourceError when the
// lattice exceeds cfg.max_nodes.
SearchResult min_trail_search(const SearchConfig& cfg);

struct CountResult {
  std::uint64_t count = 0;               // vertex sequences with exactly cfg.budget segments
  std::optional<std::uint64_t> orbits;   // classes under isometries and reversal, when requested
  std::string lattice_class;
};

CountResult count_solutions(const SearchConfig& cfg, bool reduce_by_symmetry = false);

enum class StartStatus { feasible, infeasible_over_lattice, unknown };
const char* to_string(StartStatus s);

struct StartReport {
  int k = 0;
  int budget = 0;
  std::string lattice_class;  // empty for constructive results
  bool exhaustive = false;
  std::map<Node, StartStatus> per_node;
  std::map<Node, Trail> witness;   // a trail starting at the node, for feasible nodes
  std::map<int, StartStatus> per_class;
};

// k <= 2: exhaustive search from every node over the (margin, denominator) lattice.
// k = 3: seed trails transported by all isometries; the center stays unknown.
// Throws Error for k >= 4.
StartReport feasible_starts(int k, int budget, unsigned workers = 1, int margin = 1, int denominator = 1);
StartReport feasible_starts(int k);

// Optimal C(3) trails whose endpoints cover the vertex, edge and face-center classes.
std::vector<Trail> start_seeds_3();

}  // namespace gridtrail
