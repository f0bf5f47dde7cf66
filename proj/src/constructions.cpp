// constructions.cpp

#include "indpath/constructions.hpp"

#include <map>
#include <numeric>

namespace indpath {

namespace {

std::vector<int> balanced_sizes(int k, int n) {
  std::vector<int> sizes(k, n / k);
  for (int i = 0; i < n % k; ++i) ++sizes[i];
  return sizes;
}

std::vector<int> offsets_of(const std::vector<int>& sizes) {
  std::vector<int> off(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), off.begin() + 1);
  return off;
}

}  // namespace

OrientedGraph blow_up(const BlowupSpec& spec) {
  const int k = spec.base.n;
  if ((int)spec.sizes.size() != k)
    throw Error(Errc::InvalidSpec,
                "need one size per base vertex: base has " + std::to_string(k) +
                    ", got " + std::to_string(spec.sizes.size()) + " sizes");
  for (int s : spec.sizes)
    if (s < 1)
      throw Error(Errc::InvalidSpec,
                  "class sizes must be positive, got " + std::to_string(s));
  const auto off = offsets_of(spec.sizes);
  OrientedGraph g(off[k]);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::uint8_t s = spec.base.pairs[pair_index(k, i, j)];
      if (s == 0) continue;
      for (int u = off[i]; u < off[i + 1]; ++u)
        for (int v = off[j]; v < off[j + 1]; ++v)
          g.pairs[pair_index(g.n, u, v)] = s;
    }
  return g;
}

OrientedGraph balanced_blow_up(const OrientedGraph& base, int n) {
  if (n < base.n)
    throw Error(Errc::InvalidSpec,
                "blow-up on " + std::to_string(n) +
                    " vertices needs at least one per class, base has " +
                    std::to_string(base.n));
  return blow_up(BlowupSpec{base, balanced_sizes(base.n, n)});
}

OrientedGraph iterated_balanced_blow_up(const IteratedSpec& spec) {
  const int k = spec.base.n;
  if (k < 2) throw Error(Errc::InvalidSpec, "iterated blow-up needs a base with >= 2 vertices");
  if (spec.n < 1)
    throw Error(Errc::InvalidSpec, "iterated blow-up needs n >= 1");
  const int n = spec.n;
  if (n == 1) return OrientedGraph(1);
  if (n < k) {
    std::vector<int> first(n);
    std::iota(first.begin(), first.end(), 0);
    return induced_subgraph(spec.base, VertexSet(std::move(first)));
  }
  const auto sizes = balanced_sizes(k, n);
  const auto off = offsets_of(sizes);
  OrientedGraph g = blow_up(BlowupSpec{spec.base, sizes});
  for (int i = 0; i < k; ++i) {
    if (sizes[i] <= 1) continue;
    OrientedGraph inner = iterated_balanced_blow_up({spec.base, sizes[i]});
    for (int a = 0; a < sizes[i]; ++a)
      for (int b = a + 1; b < sizes[i]; ++b)
        g.pairs[pair_index(g.n, off[i] + a, off[i] + b)] =
            inner.pairs[pair_index(sizes[i], a, b)];
  }
  return g;
}

Int blowup_p4_count(const std::vector<Int>& sizes) {
  if (sizes.size() != 5)
    throw Error(Errc::InvalidSpec, "cross-count formula takes exactly 5 sizes");
  Int total = 0;
  for (int i = 0; i < 5; ++i) {
    Int prod = 1;
    for (int j = 0; j < 5; ++j)
      if (j != i) prod *= sizes[j];
    total += prod;
  }
  return total;
}

Int blowup_p4_count_ints(const std::vector<int>& sizes) {
  std::vector<Int> s(sizes.begin(), sizes.end());
  return blowup_p4_count(s);
}

namespace {

Int iterated_c5_memo(const Int& n, std::map<Int, Int>& memo) {
  if (n <= 3) return 0;
  if (n == 4) return 1;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Int q = n / 5, r = n % 5;
  std::vector<Int> sizes(5, q);
  for (Int i = 0; i < r; ++i) sizes[(int)i] += 1;
  Int total = blowup_p4_count(sizes);
  for (const Int& s : sizes) total += iterated_c5_memo(s, memo);
  memo.emplace(n, total);
  return total;
}

}  // namespace

Int iterated_c5_p4_count(Int n) {
  std::map<Int, Int> memo;
  return iterated_c5_memo(n, memo);
}

Rat conjectured_density(int k, bool iterated) {
  if (k < 2) throw Error(Errc::OutOfRange, "density formula needs k >= 2");
  Int denom = ipow(Int(k + 1), k - 1);
  if (iterated) denom -= 1;
  return Rat(factorial(k), denom);
}

}  // namespace indpath
