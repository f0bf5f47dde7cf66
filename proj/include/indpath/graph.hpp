// graph.hpp
// Oriented graphs (no loops, no 2-cycles) stored as one ternary state per
// unordered vertex pair, row-major over pairs (0,1),(0,2),...,(n-2,n-1):
//   0 = no arc, 1 = arc low->high, 2 = arc high->low.
// The digit vector doubles as storage, hash key and enumeration index.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indpath/error.hpp"

namespace indpath {

// ----- pair indexing -----

inline int pair_count(int n) { return n * (n - 1) / 2; }

// row-major index of unordered pair (i,j), i < j
inline int pair_index(int n, int i, int j) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline std::uint8_t flip_state(std::uint8_t s) {
  // swaps the two arc orientations, keeps "none"
  return s == 0 ? 0 : (s == 1 ? std::uint8_t(2) : std::uint8_t(1));
}

// ----- OrientedGraph -----

struct OrientedGraph {
  int n = 0;
  std::vector<std::uint8_t> pairs;  // size n*(n-1)/2, values in {0,1,2}

  OrientedGraph() = default;
  explicit OrientedGraph(int n_) : n(n_), pairs(pair_count(n_), 0) {}

  // state of the unordered pair, from the perspective "u before v":
  // 1 = arc u->v, 2 = arc v->u, 0 = none
  std::uint8_t state(int u, int v) const {
    return u < v ? pairs[pair_index(n, u, v)]
                 : flip_state(pairs[pair_index(n, v, u)]);
  }
  bool has_arc(int u, int v) const { return state(u, v) == 1; }
  void set_state(int u, int v, std::uint8_t s) {
    if (u < v)
      pairs[pair_index(n, u, v)] = s;
    else
      pairs[pair_index(n, v, u)] = flip_state(s);
  }

  int arc_count() const {
    int c = 0;
    for (auto s : pairs) c += (s != 0);
    return c;
  }
  bool operator==(const OrientedGraph& o) const {
    return n == o.n && pairs == o.pairs;
  }
};

// ----- VertexSet -----

// sorted duplicate-free vertex indices; validated against a host size
struct VertexSet {
  std::vector<int> members;

  VertexSet() = default;
  explicit VertexSet(std::vector<int> m);  // sorts, throws on duplicates
  int size() const { return (int)members.size(); }
};

// throws OutOfRange unless every member lies in [0, n)
void check_vertex_set(const VertexSet& s, int n);

// ----- construction and basic operations -----

// arcs are ordered (u,v) pairs; throws Loop, TwoCycle, OutOfRange
OrientedGraph make_graph(int n, const std::vector<std::pair<int, int>>& arcs);

OrientedGraph directed_path(int k);            // k >= 1
OrientedGraph directed_cycle(int k);           // k >= 3
OrientedGraph transitive_tournament(int k);    // k >= 1, arcs low->high
OrientedGraph reverse(const OrientedGraph& g);

bool is_t3_free(const OrientedGraph& g);

OrientedGraph induced_subgraph(const OrientedGraph& g, const VertexSet& s);

// new vertex n gets exactly x's in/out-neighborhood and no arc to x
OrientedGraph clone_vertex(const OrientedGraph& g, int x);
OrientedGraph delete_vertex(const OrientedGraph& g, int x);

// ----- ternary triple/quad tables -----

// triple state code: s01 + 3*s02 + 9*s12 (row-major pair order on 3 vertices)
// true iff the triple is a transitive triangle
bool t3_triple_code(int code);

// quad state code over the 6 pairs of a sorted 4-set, row-major weights 3^0..3^5
int quad_code(const OrientedGraph& g, int a, int b, int c, int d);

// ----- text formats -----

// multi-line format: "n" then one "u v" arc per line; '#' comments and blank
// lines ignored when parsing
std::string format_graph_arcs(const OrientedGraph& g);

// compact "n:<digits>" with the row-major ternary digit string (empty digit
// part for n <= 1)
std::string format_graph_compact(const OrientedGraph& g);

OrientedGraph parse_graph_compact(const std::string& s);

// auto-detects compact vs arcs content
OrientedGraph parse_graph_text(const std::string& text);

// reads a whole file and parses; throws IoError
OrientedGraph read_graph_file(const std::string& path);

}  // namespace indpath
