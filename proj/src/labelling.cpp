#include "splitword/labelling.hpp"

#include <algorithm>

#include "splitword/errors.hpp"

namespace splitword {

CliqueLabelling::CliqueLabelling(int n, std::vector<int> order)
    : order_(std::move(order)), label_(n, 0) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    int v = order_[i];
    if (v < 0 || v >= n || label_[v] != 0)
      throw std::invalid_argument("clique order is not a sequence of distinct vertices");
    label_[v] = static_cast<int>(i) + 1;
  }
}

bool CliqueLabelling::covers(VertexSet clique) const {
  return from_vector(order_) == clique && k() == size_of(clique);
}

std::string to_string(IClass c) {
  switch (c) {
    case IClass::A1: return "A1";
    case IClass::A2: return "A2";
    case IClass::A3: return "A3";
  }
  return "?";
}

std::vector<IRecord> IClassification::of_kind(IClass c) const {
  std::vector<IRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [c](const IRecord& r) { return r.kind == c; });
  return out;
}

namespace {

// Bit i-1 set iff label i is in N(a).
VertexSet label_mask(const SplitGraph& sg, const CliqueLabelling& lab, int a) {
  VertexSet mask = 0;
  for (int i = 1; i <= lab.k(); ++i)
    if (sg.g.adjacent(a, lab.vertex(i))) mask |= singleton(i - 1);
  return mask;
}

std::optional<IRecord> record_for(int a, VertexSet mask, int k) {
  const int prefix = std::countr_one(mask);
  const int suffix = std::countl_one(mask << (kMaxVertices - k));
  if (prefix == k || prefix + suffix != size_of(mask)) return std::nullopt;
  if (prefix > 0 && suffix > 0) return IRecord{a, IClass::A1, prefix, k - suffix + 1};
  if (prefix > 0) return IRecord{a, IClass::A2, prefix, k + 1};
  if (suffix > 0) return IRecord{a, IClass::A3, 0, k - suffix + 1};
  return std::nullopt;
}

}  // namespace

IClassification classify(const SplitGraph& sg, const CliqueLabelling& lab) {
  if (!lab.covers(sg.clique)) throw std::invalid_argument("labelling does not cover the clique");
  const int k = lab.k();
  IClassification cls;
  for_each_vertex(sg.independent, [&](int a) {
    VertexSet mask = label_mask(sg, lab, a);
    if (mask == 0) {
      cls.isolated.push_back(a);
      return;
    }
    if (mask == first_n(k))
      throw InvalidPartition("vertex " + std::to_string(a) + " is adjacent to the whole clique");
    auto rec = record_for(a, mask, k);
    if (!rec) {
      std::vector<int> labels;
      for_each_vertex(mask, [&](int i) { labels.push_back(i + 1); });
      throw NotLabellable(a, std::move(labels));
    }
    if (rec->kind == IClass::A1) cls.d = std::max(cls.d, rec->m());
    cls.records.push_back(*rec);
  });
  return cls;
}

std::vector<Violation> verify_properties(const IClassification& cls, int /*k*/) {
  std::vector<Violation> out;
  auto report = [&](const char* prop, const IRecord& a, const IRecord& b, std::string detail) {
    out.push_back({prop, a.vertex, b.vertex, std::move(detail)});
  };
  const auto& recs = cls.records;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    for (std::size_t j = 0; j < recs.size(); ++j) {
      if (i == j) continue;
      const IRecord& a = recs[i];
      const IRecord& b = recs[j];
      if (a.kind == IClass::A2 && b.kind == IClass::A3 && !(a.r() < b.l()))
        report("ii", a, b, "r=" + std::to_string(a.r()) + " >= l=" + std::to_string(b.l()));
      if (a.kind == IClass::A1 && b.kind == IClass::A2 && !(b.r() < a.n()))
        report("iii", a, b, "r=" + std::to_string(b.r()) + " >= n=" + std::to_string(a.n()));
      if (a.kind == IClass::A1 && b.kind == IClass::A3 && !(a.m() < b.l()))
        report("iv", a, b, "m=" + std::to_string(a.m()) + " >= l=" + std::to_string(b.l()));
      if (a.kind == IClass::A1 && b.kind == IClass::A1 && i < j &&
          !(a.m() < b.n() && b.m() < a.n()))
        report("v", a, b,
               "m=" + std::to_string(a.m()) + ",n=" + std::to_string(a.n()) + " vs m'=" +
                   std::to_string(b.m()) + ",n'=" + std::to_string(b.n()));
    }
  }
  return out;
}

namespace {

// Positions are filled left to right. For each non-isolated independent
// vertex the membership string over filled positions must stay a prefix of
// 1^x 0^y 1^z; once the trailing run of ones has started, every remaining
// position must be a neighbor.
struct LabelSearch {
  const SplitGraph& sg;
  std::vector<int> clique;
  std::vector<int> watched;
  std::vector<int> order;
  VertexSet used = 0;
  std::optional<LabelledSplit> found;

  // Run index per watched vertex: 0 leading ones, 1 zeros, 2 trailing ones.
  bool consistent(const std::vector<int>& phase, const std::vector<int>& remaining,
                  int open) const {
    for (std::size_t w = 0; w < watched.size(); ++w)
      if (phase[w] == 2 && remaining[w] != open) return false;
    return true;
  }

  void extend(std::vector<int>& phase, std::vector<int>& remaining) {
    const int k = static_cast<int>(clique.size());
    const int p = static_cast<int>(order.size());
    if (p == k) {
      CliqueLabelling lab(sg.g.order(), order);
      IClassification cls;
      try {
        cls = classify(sg, lab);
      } catch (const NotLabellable&) {
        return;
      }
      if (verify_properties(cls, k).empty()) found = LabelledSplit{std::move(lab), std::move(cls)};
      return;
    }
    for (int c : clique) {
      if (contains(used, c)) continue;
      std::vector<int> next_phase = phase, next_remaining = remaining;
      bool ok = true;
      for (std::size_t w = 0; w < watched.size() && ok; ++w) {
        const bool member = sg.g.adjacent(watched[w], c);
        int& ph = next_phase[w];
        if (member) {
          --next_remaining[w];
          if (ph == 1) ph = 2;
        } else {
          if (ph == 2) ok = false;
          else ph = 1;
        }
      }
      if (!ok || !consistent(next_phase, next_remaining, k - p - 1)) continue;
      order.push_back(c);
      used |= singleton(c);
      extend(next_phase, next_remaining);
      if (found) return;
      order.pop_back();
      used &= ~singleton(c);
    }
  }
};

}  // namespace

std::optional<LabelledSplit> find_labelling(const SplitGraph& sg) {
  LabelSearch search{sg, to_vector(sg.clique), {}, {}, 0, std::nullopt};
  std::vector<int> remaining;
  for_each_vertex(sg.independent, [&](int a) {
    VertexSet nc = sg.g.neighbors(a) & sg.clique;
    if (nc != 0) {
      search.watched.push_back(a);
      remaining.push_back(size_of(nc));
    }
  });
  std::vector<int> phase(search.watched.size(), 0);
  search.extend(phase, remaining);
  return std::move(search.found);
}

Orientation orientation_from_labelling(const SplitGraph& sg, const CliqueLabelling& lab,
                                       const IClassification& cls) {
  const int k = lab.k();
  if (auto v = verify_properties(cls, k); !v.empty())
    throw PropertiesViolated("property (" + v.front().property + ") fails for vertices " +
                             std::to_string(v.front().first) + " and " +
                             std::to_string(v.front().second));
  Orientation d(sg.g.order());
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) d.add_arc(lab.vertex(i), lab.vertex(j));
  for (const IRecord& rec : cls.records) {
    const int a = rec.vertex;
    switch (rec.kind) {
      case IClass::A1:
        for (int i = 1; i <= rec.m(); ++i) d.add_arc(lab.vertex(i), a);
        for (int j = rec.n(); j <= k; ++j) d.add_arc(a, lab.vertex(j));
        break;
      case IClass::A2:
        for (int i = 1; i <= rec.r(); ++i) d.add_arc(lab.vertex(i), a);
        break;
      case IClass::A3:
        for (int j = rec.l(); j <= k; ++j) d.add_arc(a, lab.vertex(j));
        break;
    }
  }
  return d;
}

}  // namespace splitword
