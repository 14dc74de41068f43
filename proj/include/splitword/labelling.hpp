#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitword/orientation.hpp"
#include "splitword/split.hpp"

namespace splitword {

// Bijection from the clique onto labels 1..k. order[i] is the vertex
// carrying label i + 1.
class CliqueLabelling {
 public:
  CliqueLabelling() = default;
  CliqueLabelling(int n, std::vector<int> order);

  int k() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int vertex(int label) const { return order_[label - 1]; }
  // 0 for vertices outside the clique.
  int label(int v) const { return label_[v]; }
  bool covers(VertexSet clique) const;

 private:
  std::vector<int> order_;
  std::vector<int> label_;
};

enum class IClass { A1, A2, A3 };

std::string to_string(IClass c);

// N(a) in labels is [1, prefix_end] u [suffix_start, k].
//   A1: both runs non-empty (m = prefix_end, n = suffix_start)
//   A2: prefix only (r = prefix_end, suffix_start = k + 1)
//   A3: suffix only (l = suffix_start, prefix_end = 0)
struct IRecord {
  int vertex;
  IClass kind;
  int prefix_end;
  int suffix_start;

  int m() const { return prefix_end; }
  int n() const { return suffix_start; }
  int r() const { return prefix_end; }
  int l() const { return suffix_start; }

  friend bool operator==(const IRecord&, const IRecord&) = default;
};

struct IClassification {
  std::vector<IRecord> records;  // ascending vertex id
  std::vector<int> isolated;     // independent vertices with no neighbors
  int d = 1;                     // max(1, max m over A1)

  std::vector<IRecord> of_kind(IClass c) const;
};

// Reads each non-isolated independent vertex's class off its labelled
// neighborhood. Throws NotLabellable for a neighborhood of none of the
// three forms.
IClassification classify(const SplitGraph& sg, const CliqueLabelling& lab);

struct Violation {
  std::string property;  // "ii" .. "v"
  int first;
  int second;
  std::string detail;
};

// Pairwise conditions between classified vertices:
//   (ii)  A2 a, A3 b:  r_a < l_b
//   (iii) A1 a, A2 b:  r_b < n_a
//   (iv)  A1 a, A3 b:  m_a < l_b
//   (v)   A1 a, A1 b:  m_a < n_b and m_b < n_a
std::vector<Violation> verify_properties(const IClassification& cls, int k);

struct LabelledSplit {
  CliqueLabelling labelling;
  IClassification classification;
};

// Lexicographically least clique order (as a vertex-id sequence) that
// classifies and satisfies every property; empty iff none exists.
std::optional<LabelledSplit> find_labelling(const SplitGraph& sg);

// Clique arcs go up in label order; A1 vertices sit between their prefix
// and suffix, A2 vertices are sinks, A3 vertices are sources. Throws
// PropertiesViolated if `cls` fails verify_properties.
Orientation orientation_from_labelling(const SplitGraph& sg, const CliqueLabelling& lab,
                                       const IClassification& cls);

}  // namespace splitword
