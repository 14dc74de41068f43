#pragma once

#include <string>

#include "splitword/graph.hpp"
#include "splitword/word.hpp"

namespace splitword {

enum class CertificateKind { CompleteGraph, TwoPermutationWord, B4Embedding };

std::string to_string(CertificateKind kind);

// Permutation-representation number with a checkable witness:
//   1  complete graph
//   2  q1 q2, two permutations whose concatenation represents the graph
//   3  an induced B4 and the three-block word z = q1 q2 q3
struct PrnResult {
  int value = 0;
  CertificateKind kind = CertificateKind::CompleteGraph;
  Word q1, q2;                 // value 2
  Embedding b4;                // value 3
  WordBlocks blocks;           // value 3
};

// Throws NotSplit or NotComparability (with certificates) for inputs
// outside the split comparability class.
PrnResult prn(const Graph& g);

// Re-checks a result's certificate against `g`.
bool verify_prn_certificate(const Graph& g, const PrnResult& r);

inline constexpr int kMaxOracleVertices = 5;
inline constexpr int kMaxOracleBlocks = 3;

// Exhaustive search for k permutations whose concatenation represents
// `g`. Throws TooLarge beyond 5 vertices or 3 blocks.
bool prn_oracle(const Graph& g, int k);

}  // namespace splitword
