// constructions.hpp
// Blow-ups of a base graph (classes are independent sets, arcs between
// classes follow base arcs), balanced and iterated balanced variants, and
// closed-form copy counts for 5-class blow-ups of the directed 5-cycle.

#pragma once

#include <vector>

#include "indpath/graph.hpp"
#include "indpath/numbers.hpp"

namespace indpath {

struct BlowupSpec {
  OrientedGraph base;
  std::vector<int> sizes;  // one positive size per base vertex
};

struct IteratedSpec {
  OrientedGraph base;
  int n = 0;  // total vertex count, >= 1
};

// throws InvalidSpec on size/base mismatch or nonpositive sizes
OrientedGraph blow_up(const BlowupSpec& spec);

// part sizes differ by at most 1; the larger parts take the lowest base
// indices; throws InvalidSpec if n < |base|
OrientedGraph balanced_blow_up(const OrientedGraph& base, int n);

// recursive balanced blow-up. Recursion stops at classes of size <= 1; a
// class of size s with 2 <= s < |base| uses the base induced on its first s
// vertices (so leftover pairs keep the base arc between classes 0 and 1).
OrientedGraph iterated_balanced_blow_up(const IteratedSpec& spec);

// sum over i of prod_{j != i} sizes[j]; exactly 5 parts; equals the induced
// 4-path count of the corresponding 5-cycle blow-up
Int blowup_p4_count(const std::vector<Int>& sizes);
Int blowup_p4_count_ints(const std::vector<int>& sizes);

// induced 4-path count of iterated_balanced_blow_up({C5, n}) in closed
// recursive form: cross-class copies plus copies inside each class
Int iterated_c5_p4_count(Int n);

// iterated = true:  k!/((k+1)^(k-1) - 1)   (iterated blow-up limit)
// iterated = false: k!/(k+1)^(k-1)         (single balanced blow-up limit)
// k >= 2
Rat conjectured_density(int k, bool iterated);

}  // namespace indpath
