// search.hpp
// Exhaustive and heuristic maximization of induced-copy counts over graph
// families. Exhaustive search runs on either enumeration backend and returns
// identical reports; the local search hill-climbs with clone-delete and
// single-pair rewiring moves under strict improvement.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indpath/counting.hpp"
#include "indpath/enumerate.hpp"
#include "indpath/graph.hpp"
#include "indpath/numbers.hpp"

namespace indpath {

struct SearchReport {
  int n = 0;
  Family constraint = Family::AllOriented;
  Int max_count = 0;
  std::vector<OrientedGraph> maximizers;    // canonical reps, code-ascending
  std::vector<std::string> maximizer_codes;
  bool exhaustive = false;
  Int labeled_examined = 0;  // constraint-satisfying labeled graphs covered
};

enum class SearchBackend { Auto, Sweep, Orderly };

// exact maximum of count_induced(., target) and all maximizers up to
// isomorphism; Sweep needs n <= 6, Orderly n <= 7
SearchReport exhaustive_max(int n, Family constraint,
                            const OrientedGraph& target,
                            SearchBackend backend = SearchBackend::Auto,
                            int threads = 0);

struct MoveSet {
  bool clone_delete = true;
  bool rewire_pair = true;
};

// keep x, delete y, append a clone of x (same vertex count); x != y
OrientedGraph clone_delete(const OrientedGraph& g, int x, int y);

// steepest-ascent maximization of the induced 4-path count from g0, strict
// improvement only; budget caps the number of move evaluations; throws
// InvalidStart if g0 violates the constraint
SearchReport local_search(const OrientedGraph& g0, Family constraint,
                          MoveSet moves, std::uint64_t budget = 1000000);

// vertex minimizing count_p4_through(g, {v}) (lowest index on ties) and the
// minimum value; |G| >= 4
std::pair<int, Int> vertex_min_participation(const OrientedGraph& g);

}  // namespace indpath
