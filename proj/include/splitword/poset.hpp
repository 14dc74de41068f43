#pragma once

#include <vector>

#include "splitword/orientation.hpp"

namespace splitword {

// Strict partial order on 0..n-1. above(x) holds every y with x < y.
class Poset {
 public:
  Poset() = default;
  // Throws std::invalid_argument unless the relation is irreflexive and
  // transitive.
  Poset(int n, std::vector<VertexSet> above);

  int size() const { return static_cast<int>(above_.size()); }
  bool less(int x, int y) const { return contains(above_[x], y); }
  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
  VertexSet above(int x) const { return above_[x]; }

  // Unordered incomparable pairs (x, y), x < y, lexicographic.
  std::vector<Edge> incomparable_pairs() const;

 private:
  std::vector<VertexSet> above_;
};

// Throws NotTransitive unless the arcs of `d` already form a strict order.
Poset poset_from_orientation(const Orientation& d);

inline constexpr int kMaxDimensionElements = 9;

// Every linear extension, in lexicographic order.
std::vector<std::vector<int>> linear_extensions(const Poset& p);

// Intersection of the extensions is exactly the order of `p`.
bool is_realizer(const Poset& p, const std::vector<std::vector<int>>& extensions);

struct Realizer {
  int dimension = 0;
  std::vector<std::vector<int>> extensions;
};

// Smallest realizer, searching t = 1, 2, ... up to `cap`. Throws TooLarge
// above nine elements and CapExceeded when no realizer of size <= cap exists.
Realizer minimum_realizer(const Poset& p, int cap);

int dimension(const Poset& p, int cap);

}  // namespace splitword
