// counting.hpp
// Exact induced-copy counting and densities. Subset enumeration with
// precomputed canonical-key tables for patterns on <= 5 vertices, a dedicated
// state-code table for the directed 4-path (the hot pattern), and a memoized
// branch-and-bound fallback for 6..8-vertex patterns.

#pragma once

#include <map>
#include <string>

#include "indpath/graph.hpp"
#include "indpath/numbers.hpp"

namespace indpath {

// number of vertex subsets inducing a copy of H; throws SizeMismatch if
// |H| > |G|
Int count_induced(const OrientedGraph& g, const OrientedGraph& h);

// count_induced / C(|G|, |H|), reduced
Rat density(const OrientedGraph& g, const OrientedGraph& h);

// induced 4-path copies whose vertex set contains all of A (|A| <= 4)
Int count_p4_through(const OrientedGraph& g, const VertexSet& a);

// fast path: number of induced directed 4-paths
Int count_p4(const OrientedGraph& g);

// histogram of induced k-subgraphs keyed by public canonical code
std::map<std::string, Int> induced_profile(const OrientedGraph& g, int k);

// true iff the 6-digit quad code induces a directed 4-path
bool quad_is_p4(int code);

}  // namespace indpath
