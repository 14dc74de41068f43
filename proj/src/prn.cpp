#include "splitword/prn.hpp"

#include <algorithm>
#include <numeric>

#include "splitword/errors.hpp"
#include "splitword/orientation.hpp"

namespace splitword {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::CompleteGraph: return "CompleteGraph";
    case CertificateKind::TwoPermutationWord: return "TwoPermutationWord";
    case CertificateKind::B4Embedding: return "B4Embedding";
  }
  return "?";
}

namespace {

// Linear order of a transitive tournament, by in-degree.
std::vector<int> tournament_order(const Orientation& t) {
  std::vector<int> order(t.order());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> indegree(t.order());
  for (int v = 0; v < t.order(); ++v) indegree[v] = size_of(t.pred(v));
  std::sort(order.begin(), order.end(), [&](int a, int b) { return indegree[a] < indegree[b]; });
  return order;
}

// For transitive orientations D of g and F of its complement, D u F and
// D u F^-1 are linear orders whose intersection is D.
std::pair<Word, Word> permutation_realizer(const Graph& g, const Orientation& d) {
  auto f = find_transitive_orientation(complement(g));
  if (!f) throw std::logic_error("complement of a B4-free split comparability graph is not comparability");
  const int n = g.order();
  Orientation forward(n), backward(n);
  for (auto [u, v] : d.arcs()) {
    forward.add_arc(u, v);
    backward.add_arc(u, v);
  }
  for (auto [u, v] : f->arcs()) {
    forward.add_arc(u, v);
    backward.add_arc(v, u);
  }
  if (!is_transitive_relation(forward) || !is_transitive_relation(backward))
    throw std::logic_error("realizer orders are not linear");
  return {tournament_order(forward), tournament_order(backward)};
}

}  // namespace

PrnResult prn(const Graph& g) {
  SplitGraph sg = split_partition(g);
  if (auto hit = find_forbidden(g, {kNonComparability.begin(), kNonComparability.end()}))
    throw NotComparability(to_string(hit->member), hit->embedding);

  PrnResult r;
  if (g.is_complete()) {
    r.value = 1;
    r.kind = CertificateKind::CompleteGraph;
  } else if (auto hit = find_forbidden(g, {Forbidden::B4})) {
    r.value = 3;
    r.kind = CertificateKind::B4Embedding;
    r.b4 = hit->embedding;
    WordReport word = build_and_verify(sg);
    if (!word.all_pass()) throw std::logic_error("three-block word failed verification");
    r.blocks = std::move(word.blocks);
  } else {
    auto d = find_transitive_orientation(g);
    if (!d) throw std::logic_error("B1/B2/B3-free split graph without a transitive orientation");
    r.value = 2;
    r.kind = CertificateKind::TwoPermutationWord;
    std::tie(r.q1, r.q2) = permutation_realizer(g, *d);
  }
  if (!verify_prn_certificate(g, r)) throw std::logic_error("prn certificate failed verification");
  return r;
}

bool verify_prn_certificate(const Graph& g, const PrnResult& r) {
  const int n = g.order();
  switch (r.kind) {
    case CertificateKind::CompleteGraph:
      return r.value == 1 && g.is_complete();
    case CertificateKind::TwoPermutationWord: {
      if (r.value != 2 || g.is_complete()) return false;
      if (!is_permutation_of(r.q1, n) || !is_permutation_of(r.q2, n)) return false;
      Word w = r.q1;
      w.insert(w.end(), r.q2.begin(), r.q2.end());
      return represents(w, g);
    }
    case CertificateKind::B4Embedding: {
      if (r.value != 3 || !is_induced_embedding(g, forbidden_graph(Forbidden::B4), r.b4))
        return false;
      if (!is_permutation_of(r.blocks.q1, n) || !is_permutation_of(r.blocks.q2, n) ||
          !is_permutation_of(r.blocks.q3, n))
        return false;
      return represents(r.blocks.concatenated(), g);
    }
  }
  return false;
}

bool prn_oracle(const Graph& g, int k) {
  const int n = g.order();
  if (n > kMaxOracleVertices || k > kMaxOracleBlocks)
    throw TooLarge("prn oracle is limited to 5 vertices and 3 blocks");
  if (k < 1) return false;

  // Pair (u, v), u < v, gets one bit; a permutation sets it when u precedes v.
  // The concatenation of permutations alternates on a pair exactly when
  // every block orders it the same way.
  std::vector<std::uint32_t> edge_bit_of(n * n, 0);
  std::uint32_t edges = 0, all = 0;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit) {
      edge_bit_of[u * n + v] = 1U << bit;
      all |= 1U << bit;
      if (g.adjacent(u, v)) edges |= 1U << bit;
    }

  std::vector<Word> perms;
  std::vector<std::uint32_t> order_bits;
  Word p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] < p[j]) bits |= edge_bit_of[p[i] * n + p[j]];
    perms.push_back(p);
    order_bits.push_back(bits);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::uint32_t agree) -> bool {
    if ((agree & edges) != edges) return false;
    if (static_cast<int>(chosen.size()) == k) return agree == edges;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      std::uint32_t next = chosen.empty() ? all : agree & ~(order_bits[chosen.front()] ^ order_bits[i]);
      chosen.push_back(i);
      if (self(self, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, all)) return false;

  Word w;
  for (std::size_t i : chosen) w.insert(w.end(), perms[i].begin(), perms[i].end());
  if (!represents(w, g)) throw std::logic_error("prn oracle witness does not represent the graph");
  return true;
}

}  // namespace splitword
