#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "splitword/graph.hpp"
#include "splitword/labelling.hpp"
#include "splitword/split.hpp"

namespace splitword {

using Word = std::vector<int>;

// Subsequence of `w` keeping only the given letters.
Word restrict(const Word& w, std::span<const int> letters);
Word restrict(const Word& w, VertexSet letters);

Word reversed(Word w);

// The letters x and y strictly alternate in w|{x,y}. Restrictions of
// length at most one are vacuously alternating.
bool alternates(const Word& w, int x, int y);

// Adjacency in `g` coincides with alternation in `w` for every pair.
// Throws MissingVertex if some vertex of `g` never occurs.
bool represents(const Word& w, const Graph& g);

// k when every letter occurs exactly k times; 0 for the empty word.
std::optional<int> uniformity(const Word& w);

bool is_permutation_of(const Word& w, int n);

struct WordBlocks {
  Word q1, q2, q3;

  Word concatenated() const;
};

// The three-permutation construction. Independent vertices are processed
// in ascending id order; the overload takes an explicit processing order
// (a permutation of the classified vertices). Isolated independent
// vertices S are appended to q1, prepended in reverse to q2, and appended
// to q3. Throws PropertiesViolated if `cls` fails verify_properties.
WordBlocks build_word(const SplitGraph& sg, const CliqueLabelling& lab,
                      const IClassification& cls);
WordBlocks build_word(const SplitGraph& sg, const CliqueLabelling& lab,
                      const IClassification& cls, std::span<const int> processing_order);

struct WordReport {
  LabelledSplit labelled;
  WordBlocks blocks;
  Word z;
  std::optional<int> uniformity;
  bool blocks_are_permutations = false;
  bool adjacent_pairs_alternate = false;     // every edge alternates
  bool independent_pairs_separate = false;   // no pair inside I alternates
  bool nonadjacent_cross_separate = false;   // no non-edge I x C pair alternates
  bool represents = false;

  bool all_pass() const {
    return uniformity == 3 && blocks_are_permutations && adjacent_pairs_alternate &&
           independent_pairs_separate && nonadjacent_cross_separate && represents;
  }
};

// Labelling search, construction and the pairwise checks in one go.
// Throws NotComparability with a forbidden-subgraph certificate when no
// labelling exists.
WordReport build_and_verify(const SplitGraph& sg);

// Clique vertices by label, independent vertices by k + rank in ascending
// id order.
std::vector<int> label_notation(const SplitGraph& sg, const CliqueLabelling& lab,
                                const Word& w);

// Compact digit rendering of label_notation; empty when n > 9.
std::string compact_digits(const SplitGraph& sg, const CliqueLabelling& lab, const Word& w);

std::string join(const Word& w, const char* sep = " ");

}  // namespace splitword
