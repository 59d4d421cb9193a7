#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridtrail/geometry.hpp"

namespace gridtrail {

// 3^k; throws Error when k < 0 or the value exceeds 64 bits.
std::uint64_t node_count(int k);

// Base-3 index, first coordinate most significant.
std::uint64_t node_index(const Node& n);
Node node_at(std::uint64_t index, int k);

// Number of coordinates equal to 1. Throws Error if a coordinate is outside {0,1,2}.
int classify_node(const Node& n);

// "vertex", "edge", "face-center", "center" where the k=3 taxonomy applies,
// generated "class-c of k" names otherwise.
std::string class_name(int c, int k);

// binomial(k,c) * 2^(k-c). Throws Error unless 0 <= c <= k.
std::uint64_t class_count(int k, int c);

// Axis permutation followed by per-axis flips x -> 2 - x.
// Image coordinate i is taken from source axis perm[i].
class Isometry {
 public:
  Isometry(std::vector<int> perm, std::vector<bool> flip);
  static Isometry identity(int k);

  int dim() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<bool>& flip() const { return flip_; }

  Point apply(const Point& p) const;
  Node apply(const Node& n) const;
  Segment apply(const Segment& s) const;

  // (f.compose(g))(x) == f(g(x))
  Isometry compose(const Isometry& g) const;
  Isometry inverse() const;

  friend bool operator==(const Isometry& f, const Isometry& g) {
    return f.perm_ == g.perm_ && f.flip_ == g.flip_;
  }
  friend bool operator<(const Isometry& f, const Isometry& g) {
    return f.perm_ != g.perm_ ? f.perm_ < g.perm_ : f.flip_ < g.flip_;
  }

 private:
  std::vector<int> perm_;
  std::vector<bool> flip_;
};

// All 2^k k! isometries in a fixed order (permutations lexicographic, then flip masks).
std::vector<Isometry> enumerate_isometries(int k);

}  // namespace gridtrail
