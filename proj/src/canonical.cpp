// canonical.cpp

#include "indpath/canonical.hpp"

#include <algorithm>
#include <array>

namespace indpath {

namespace {

// Branch-and-bound minimum over all relabelings, in colex pair order.
// `best` holds the least digit string found so far; unexplored tail positions
// are padded with 3 (greater than any real digit) so a strictly better prefix
// simply overwrites its chunk and resets the accumulated permutations.
struct MinSearch {
  const OrientedGraph* g = nullptr;
  int n = 0;
  std::vector<std::uint8_t> best;
  std::vector<std::vector<int>> min_perms;
  std::vector<int> perm;

  void run() {
    best.assign(pair_count(n), std::uint8_t(3));
    min_perms.clear();
    perm.assign(n, -1);
    dfs(0, 0u);
  }

  void dfs(int k, unsigned used) {
    if (k == n) {
      min_perms.push_back(perm);
      return;
    }
    const int off = k * (k - 1) / 2;  // colex offset of the depth-k chunk
    std::array<std::uint8_t, kMaxCanonicalN> d{};
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      int rel = 0;  // vs best chunk: -1 strictly less, 0 equal, +1 greater
      for (int i = 0; i < k; ++i) {
        d[i] = g->state(perm[i], v);
        if (rel == 0 && d[i] != best[off + i])
          rel = d[i] < best[off + i] ? -1 : +1;
        if (rel == +1) break;
      }
      if (rel == +1) continue;
      if (rel == -1) {
        for (int i = 0; i < k; ++i) best[off + i] = d[i];
        std::fill(best.begin() + off + k, best.end(), std::uint8_t(3));
        min_perms.clear();
      }
      perm[k] = v;
      dfs(k + 1, used | (1u << v));
      perm[k] = -1;
    }
  }
};

}  // namespace

CanonicalInfo canonicalize(const OrientedGraph& g) {
  if (g.n > kMaxCanonicalN)
    throw Error(Errc::Unsupported, "canonical labeling limited to n <= " +
                                       std::to_string(kMaxCanonicalN) +
                                       ", got n = " + std::to_string(g.n));
  CanonicalInfo info;
  if (g.n == 0) {
    info.rep = g;
    info.code = format_graph_compact(g);
    info.auts = {{}};
    info.last_vertex_canonical = true;
    return info;
  }

  MinSearch ms;
  ms.g = &g;
  ms.n = g.n;
  ms.run();

  const auto& sigma0 = ms.min_perms.front();
  OrientedGraph rep(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      rep.set_state(i, j, g.state(sigma0[i], sigma0[j]));
  info.rep = rep;
  info.code = format_graph_compact(rep);

  // every minimizing sigma yields the automorphism u -> sigma(sigma0^{-1}(u))
  info.auts.reserve(ms.min_perms.size());
  info.last_vertex_canonical = false;
  for (const auto& sigma : ms.min_perms) {
    std::vector<int> alpha(g.n);
    for (int i = 0; i < g.n; ++i) alpha[sigma0[i]] = sigma[i];
    info.auts.push_back(std::move(alpha));
    if (sigma[g.n - 1] == g.n - 1) info.last_vertex_canonical = true;
  }
  return info;
}

CanonicalForm canonical_form(const OrientedGraph& g) {
  return CanonicalForm{canonicalize(g).code};
}

bool are_isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
  if (a.n != b.n) return false;
  if (a.arc_count() != b.arc_count()) return false;
  return canonicalize(a).code == canonicalize(b).code;
}

}  // namespace indpath
