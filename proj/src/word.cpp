#include "splitword/word.hpp"

#include <algorithm>
#include <map>

#include "splitword/errors.hpp"

namespace splitword {

Word restrict(const Word& w, std::span<const int> letters) {
  Word out;
  for (int x : w)
    if (std::find(letters.begin(), letters.end(), x) != letters.end()) out.push_back(x);
  return out;
}

Word restrict(const Word& w, VertexSet letters) {
  Word out;
  for (int x : w)
    if (x >= 0 && x < kMaxVertices && contains(letters, x)) out.push_back(x);
  return out;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

bool alternates(const Word& w, int x, int y) {
  int last = -1;
  bool any = false;
  for (int c : w) {
    if (c != x && c != y) continue;
    if (any && c == last) return false;
    last = c;
    any = true;
  }
  return true;
}

bool represents(const Word& w, const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> positions(n);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= 0 && w[i] < n) positions[w[i]].push_back(static_cast<int>(i));
  std::vector<int> missing;
  for (int v = 0; v < n; ++v)
    if (positions[v].empty()) missing.push_back(v);
  if (!missing.empty()) throw MissingVertex(std::move(missing));

  // Merge the two occurrence lists and look for a repeated letter.
  auto alternate = [&](int x, int y) {
    const auto& px = positions[x];
    const auto& py = positions[y];
    std::size_t i = 0, j = 0;
    int last = -1;
    while (i < px.size() || j < py.size()) {
      int next = (j == py.size() || (i < px.size() && px[i] < py[j])) ? x : y;
      if (next == last) return false;
      last = next;
      (next == x ? i : j)++;
    }
    return true;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != alternate(u, v)) return false;
  return true;
}

std::optional<int> uniformity(const Word& w) {
  if (w.empty()) return 0;
  std::map<int, int> counts;
  for (int x : w) ++counts[x];
  const int k = counts.begin()->second;
  for (const auto& [letter, c] : counts)
    if (c != k) return std::nullopt;
  return k;
}

bool is_permutation_of(const Word& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : w) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Word WordBlocks::concatenated() const {
  Word z = q1;
  z.insert(z.end(), q2.begin(), q2.end());
  z.insert(z.end(), q3.begin(), q3.end());
  return z;
}

namespace {

void insert_after(Word& w, int anchor, std::span<const int> letters) {
  auto it = std::find(w.begin(), w.end(), anchor);
  if (it == w.end()) throw std::logic_error("splice anchor missing from word");
  w.insert(it + 1, letters.begin(), letters.end());
}

void insert_before(Word& w, int anchor, int letter) {
  auto it = std::find(w.begin(), w.end(), anchor);
  if (it == w.end()) throw std::logic_error("splice anchor missing from word");
  w.insert(it, letter);
}

}  // namespace

WordBlocks build_word(const SplitGraph& sg, const CliqueLabelling& lab,
                      const IClassification& cls) {
  std::vector<int> ascending;
  for (const IRecord& rec : cls.records) ascending.push_back(rec.vertex);
  std::sort(ascending.begin(), ascending.end());
  return build_word(sg, lab, cls, ascending);
}

WordBlocks build_word(const SplitGraph& sg, const CliqueLabelling& lab,
                      const IClassification& cls, std::span<const int> processing_order) {
  const int k = lab.k();
  if (auto v = verify_properties(cls, k); !v.empty())
    throw PropertiesViolated("property (" + v.front().property + ") fails for vertices " +
                             std::to_string(v.front().first) + " and " +
                             std::to_string(v.front().second));
  if (!lab.covers(sg.clique)) throw std::invalid_argument("labelling does not cover the clique");

  std::map<int, IRecord> by_vertex;
  for (const IRecord& rec : cls.records) by_vertex.emplace(rec.vertex, rec);
  {
    std::vector<int> sorted(processing_order.begin(), processing_order.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected;
    for (const auto& [v, rec] : by_vertex) expected.push_back(v);
    if (sorted != expected)
      throw std::invalid_argument("processing order is not a permutation of the classified vertices");
  }

  WordBlocks b{lab.order(), lab.order(), lab.order()};
  int d = 1;
  VertexSet a1 = 0, a2 = 0, a3 = 0;
  for (int a : processing_order) {
    const IRecord& rec = by_vertex.at(a);
    const int one[] = {a};
    switch (rec.kind) {
      case IClass::A1:
        d = std::max(d, rec.m());
        insert_after(b.q1, lab.vertex(rec.m()), one);
        insert_before(b.q2, lab.vertex(rec.n()), a);
        a1 |= singleton(a);
        break;
      case IClass::A2:
        insert_after(b.q2, lab.vertex(rec.r()), one);
        b.q3.push_back(a);
        a2 |= singleton(a);
        break;
      case IClass::A3:
        insert_before(b.q2, lab.vertex(rec.l()), a);
        insert_before(b.q3, lab.vertex(rec.l()), a);
        a3 |= singleton(a);
        break;
    }
  }

  Word q1 = reversed(restrict(b.q2, a3));
  q1.insert(q1.end(), b.q1.begin(), b.q1.end());
  Word tail = reversed(restrict(b.q2, a2));
  q1.insert(q1.end(), tail.begin(), tail.end());
  b.q1 = std::move(q1);

  if (a1 != 0) insert_after(b.q3, lab.vertex(d), reversed(restrict(b.q1, a1)));

  const Word& s = cls.isolated;
  b.q1.insert(b.q1.end(), s.begin(), s.end());
  b.q2.insert(b.q2.begin(), s.rbegin(), s.rend());
  b.q3.insert(b.q3.end(), s.begin(), s.end());
  return b;
}

WordReport build_and_verify(const SplitGraph& sg) {
  auto labelled = find_labelling(sg);
  if (!labelled) {
    if (auto hit = find_forbidden(sg.g, {kNonComparability.begin(), kNonComparability.end()}))
      throw NotComparability(to_string(hit->member), hit->embedding);
    throw std::logic_error("no labelling, yet no B1/B2/B3 certificate");
  }
  WordReport report;
  report.blocks = build_word(sg, labelled->labelling, labelled->classification);
  report.labelled = std::move(*labelled);
  report.z = report.blocks.concatenated();
  report.uniformity = uniformity(report.z);
  const int n = sg.g.order();
  report.blocks_are_permutations = is_permutation_of(report.blocks.q1, n) &&
                                   is_permutation_of(report.blocks.q2, n) &&
                                   is_permutation_of(report.blocks.q3, n);
  report.adjacent_pairs_alternate = true;
  report.independent_pairs_separate = true;
  report.nonadjacent_cross_separate = true;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool alt = alternates(report.z, u, v);
      if (sg.g.adjacent(u, v)) {
        report.adjacent_pairs_alternate &= alt;
      } else if (contains(sg.independent, u) && contains(sg.independent, v)) {
        report.independent_pairs_separate &= !alt;
      } else {
        report.nonadjacent_cross_separate &= !alt;
      }
    }
  }
  report.represents = represents(report.z, sg.g);
  return report;
}

std::vector<int> label_notation(const SplitGraph& sg, const CliqueLabelling& lab,
                                const Word& w) {
  std::vector<int> rank(sg.g.order(), 0);
  int next = lab.k();
  for_each_vertex(sg.independent, [&](int a) { rank[a] = ++next; });
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) out.push_back(contains(sg.clique, x) ? lab.label(x) : rank[x]);
  return out;
}

std::string compact_digits(const SplitGraph& sg, const CliqueLabelling& lab, const Word& w) {
  if (sg.g.order() > 9) return {};
  std::string out;
  for (int x : label_notation(sg, lab, w)) out += static_cast<char>('0' + x);
  return out;
}

std::string join(const Word& w, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace splitword
