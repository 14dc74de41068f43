#pragma once

#include <optional>
#include <vector>

#include "splitword/graph.hpp"
#include "splitword/orientation.hpp"

// Brute-force reference checks. Each one is written directly from the
// definition and shares no search code with the routines it cross-checks.
namespace splitword::oracle {

// Tries every injective map from pattern to host vertices.
bool has_induced(const Graph& host, const Graph& pattern);

// Tries every vertex subset as the clique side.
bool is_split(const Graph& g);

// All 2^|E| orientations that are transitive. Limited to |E| <= 20.
std::vector<Orientation> transitive_orientations(const Graph& g);

// Whether some transitive orientation exists: enumerates the 2^|E|
// orientations for |E| <= 15, otherwise orients edges along each of the n!
// vertex orders for n <= 8. Empty when both are out of reach.
std::optional<bool> is_comparability(const Graph& g);

// Walks every directed path and checks the shortcut condition verbatim.
bool is_semi_transitive(const Graph& g, const Orientation& d);

}  // namespace splitword::oracle
