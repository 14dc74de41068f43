#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace splitword {

// Vertex ids are dense in 0..63; a set of them fits in one machine word.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr int size_of(VertexSet s) { return std::popcount(s); }

constexpr VertexSet first_n(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(size_of(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet from_vector(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= singleton(v);
  return s;
}

}  // namespace splitword
