#include "gridtrail/grid.hpp"

#include <algorithm>
#include <numeric>

#include "gridtrail/error.hpp"

namespace gridtrail {

std::uint64_t node_count(int k) {
  if (k < 0) throw Error("negative dimension");
  if (k > 40) throw Error("3^k does not fit in 64 bits");
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) n *= 3;
  return n;
}

std::uint64_t node_index(const Node& n) {
  std::uint64_t idx = 0;
  for (int c : n) idx = idx * 3 + static_cast<std::uint64_t>(c);
  return idx;
}

Node node_at(std::uint64_t index, int k) {
  Node n(k);
  for (int i = k - 1; i >= 0; --i) {
    n[i] = static_cast<int>(index % 3);
    index /= 3;
  }
  return n;
}

int classify_node(const Node& n) {
  int c = 0;
  for (int v : n) {
    if (v < 0 || v > 2) throw Error("coordinate outside {0,1,2}");
    if (v == 1) ++c;
  }
  return c;
}

std::string class_name(int c, int k) {
  if (c < 0 || c > k) throw Error("class index out of range");
  if (c == 0) return "vertex";
  if (c == k) return "center";
  if (k <= 3 && c == 1) return "edge";
  if (k == 3 && c == 2) return "face-center";
  return "class-" + std::to_string(c) + " of " + std::to_string(k);
}

std::uint64_t class_count(int k, int c) {
  if (k < 0 || c < 0 || c > k) throw Error("class_count: need 0 <= c <= k");
  if (k > 40) throw Error("class_count: k too large");
  std::uint64_t binom = 1;
  for (int i = 1; i <= c; ++i) binom = binom * static_cast<std::uint64_t>(k - c + i) / i;
  return binom << (k - c);
}

Isometry::Isometry(std::vector<int> perm, std::vector<bool> flip)
    : perm_(std::move(perm)), flip_(std::move(flip)) {
  if (perm_.size() != flip_.size()) throw Error("isometry: perm/flip size mismatch");
  std::vector<int> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) throw Error("isometry: not a permutation");
  }
}

Isometry Isometry::identity(int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  return Isometry(perm, std::vector<bool>(k, false));
}

Point Isometry::apply(const Point& p) const {
  if (static_cast<int>(p.size()) != dim()) throw Error("isometry: dimension mismatch");
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p[perm_[i]];
    if (flip_[i]) out[i] = 2 - out[i];
  }
  return out;
}

Node Isometry::apply(const Node& n) const {
  if (static_cast<int>(n.size()) != dim()) throw Error("isometry: dimension mismatch");
  Node out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    out[i] = n[perm_[i]];
    if (flip_[i]) out[i] = 2 - out[i];
  }
  return out;
}

Segment Isometry::apply(const Segment& s) const { return Segment(apply(s.a()), apply(s.b())); }

Isometry Isometry::compose(const Isometry& g) const {
  // f(g(x))_i = flip_f[i] ? 2 - g(x)[perm_f[i]] : g(x)[perm_f[i]]
  //           with g(x)_j = flip_g[j] ? 2 - x[perm_g[j]] : x[perm_g[j]].
  const int k = dim();
  if (g.dim() != k) throw Error("isometry: dimension mismatch");
  std::vector<int> perm(k);
  std::vector<bool> flip(k);
  for (int i = 0; i < k; ++i) {
    perm[i] = g.perm_[perm_[i]];
    flip[i] = flip_[i] != g.flip_[perm_[i]];
  }
  return Isometry(perm, flip);
}

Isometry Isometry::inverse() const {
  const int k = dim();
  std::vector<int> perm(k);
  std::vector<bool> flip(k);
  for (int i = 0; i < k; ++i) {
    perm[perm_[i]] = i;
    flip[perm_[i]] = flip_[i];
  }
  return Isometry(perm, flip);
}

std::vector<Isometry> enumerate_isometries(int k) {
  if (k < 1) throw Error("enumerate_isometries: k must be >= 1");
  if (k > 8) throw Error("enumerate_isometries: k > 8 is not supported");
  std::vector<Isometry> out;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<bool> flip(k);
      for (int i = 0; i < k; ++i) flip[i] = (mask >> i) & 1u;
      out.emplace_back(perm, flip);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace gridtrail
