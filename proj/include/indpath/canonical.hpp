// canonical.hpp
// Canonical labeling by explicit minimum over vertex permutations (n <= 8),
// with branch-and-bound pruning. Internally the search minimizes the digit
// string in colex pair order (placing vertex k appends the digits of pairs
// (0,k)..(k-1,k), so prefixes are comparable); the public code is the
// row-major compact string of the minimizing representative. Equal codes iff
// isomorphic. Also yields the automorphism group (as explicit permutations)
// and the orderly-extension acceptance predicate.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

inline constexpr int kMaxCanonicalN = 8;

struct CanonicalForm {
  std::string code;  // "n:<digits>", row-major, of the canonical representative
  bool operator==(const CanonicalForm& o) const { return code == o.code; }
  bool operator<(const CanonicalForm& o) const { return code < o.code; }
};

struct CanonicalInfo {
  OrientedGraph rep;                   // canonical representative
  std::string code;                    // format_graph_compact(rep)
  std::vector<std::vector<int>> auts;  // all automorphisms, identity included
  bool last_vertex_canonical = false;  // some minimizing permutation fixes n-1
  std::uint64_t aut_order() const { return auts.size(); }
};

// full information; throws Unsupported for n > kMaxCanonicalN
CanonicalInfo canonicalize(const OrientedGraph& g);

CanonicalForm canonical_form(const OrientedGraph& g);

bool are_isomorphic(const OrientedGraph& a, const OrientedGraph& b);

}  // namespace indpath
