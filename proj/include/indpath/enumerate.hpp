// enumerate.hpp
// Isomorph-free exhaustive generation of oriented graphs and T3-free oriented
// graphs. Two self-verifying backends: a labeled ternary-counter sweep with
// canonical dedup (n <= 6) and orderly one-vertex extension with canonical
// acceptance (n <= 7). Families are sorted by canonical code and carry
// automorphism counts for orbit reconciliation.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "indpath/graph.hpp"
#include "indpath/numbers.hpp"

namespace indpath {

enum class Family { AllOriented, T3Free };

const char* family_name(Family f);

struct GraphFamily {
  int n = 0;
  Family constraint = Family::AllOriented;
  std::vector<OrientedGraph> members;       // canonical representatives
  std::vector<std::string> codes;           // compact codes, ascending
  std::vector<std::uint64_t> aut_orders;    // |Aut| per member

  int size() const { return (int)members.size(); }
  // sum over members of n!/|Aut|: the number of labeled graphs covered
  Int labeled_total() const;
};

enum class EnumBackend { Auto, Sweep, Orderly };

// complete duplicate-free family; Sweep needs n <= 5 (dedup tables), Orderly
// needs n <= 7; Auto picks Sweep for n <= 5
GraphFamily enumerate_family(int n, Family constraint,
                             EnumBackend backend = EnumBackend::Auto,
                             int threads = 0);

// visits every labeled graph satisfying the constraint in ternary-counter
// order (pair (0,1) least significant); returns the visit count; n <= 6
std::uint64_t labeled_sweep(int n, Family constraint,
                            const std::function<void(const OrientedGraph&)>& visit);

// same sweep restricted to counter values in [lo, hi), for block-parallel
// scans; the full range is [0, 3^(n(n-1)/2))
std::uint64_t labeled_sweep_range(
    int n, Family constraint, std::uint64_t lo, std::uint64_t hi,
    const std::function<void(const OrientedGraph&)>& visit);

// visit count only, parallel over counter blocks; n <= 6
std::uint64_t labeled_count(int n, Family constraint, int threads = 0);

}  // namespace indpath
