// search.cpp

#include "indpath/search.hpp"

#include <algorithm>
#include <map>

#include "indpath/canonical.hpp"
#include "indpath/parallel.hpp"

namespace indpath {

namespace {

std::uint64_t pow3(int e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= 3;
  return v;
}

// pass 1: maximum of the objective over the labeled family, by value blocks
// pass 2: canonical classes attaining it
SearchReport sweep_max(int n, Family constraint, const OrientedGraph& target,
                       int threads) {
  const std::uint64_t total = pow3(pair_count(n));
  const int nw = resolve_threads(threads);
  const int nblocks = nw == 1 || total < 4096 ? 1 : nw * 4;
  const std::uint64_t len = (total + nblocks - 1) / nblocks;

  struct BlockMax {
    Int best = -1;
    std::uint64_t seen = 0;
  };
  auto pass1 = parallel_blocks<BlockMax>(nblocks, nw, [&](int b) {
    BlockMax bm;
    std::function<void(const OrientedGraph&)> visit =
        [&](const OrientedGraph& g) {
          Int c = count_induced(g, target);
          if (c > bm.best) bm.best = c;
        };
    std::uint64_t lo = (std::uint64_t)b * len;
    std::uint64_t hi = std::min(total, lo + len);
    if (lo < hi) bm.seen = labeled_sweep_range(n, constraint, lo, hi, visit);
    return bm;
  });

  SearchReport rep;
  rep.n = n;
  rep.constraint = constraint;
  rep.exhaustive = true;
  Int best = -1;
  std::uint64_t seen = 0;
  for (const auto& bm : pass1) {
    if (bm.best > best) best = bm.best;
    seen += bm.seen;
  }
  rep.max_count = best;
  rep.labeled_examined = Int(seen);

  using ClassMap = std::map<std::string, OrientedGraph>;
  auto pass2 = parallel_blocks<ClassMap>(nblocks, nw, [&](int b) {
    ClassMap classes;
    std::function<void(const OrientedGraph&)> visit =
        [&](const OrientedGraph& g) {
          if (count_induced(g, target) == best) {
            CanonicalInfo info = canonicalize(g);
            classes.emplace(info.code, info.rep);
          }
        };
    std::uint64_t lo = (std::uint64_t)b * len;
    std::uint64_t hi = std::min(total, lo + len);
    if (lo < hi) labeled_sweep_range(n, constraint, lo, hi, visit);
    return classes;
  });
  ClassMap classes;
  for (auto& cm : pass2) classes.merge(cm);
  for (auto& [code, g] : classes) {
    rep.maximizer_codes.push_back(code);
    rep.maximizers.push_back(g);
  }
  return rep;
}

}  // namespace

SearchReport exhaustive_max(int n, Family constraint,
                            const OrientedGraph& target, SearchBackend backend,
                            int threads) {
  if (target.n > n)
    throw Error(Errc::SizeMismatch, "pattern on " + std::to_string(target.n) +
                                        " vertices cannot occur in n = " +
                                        std::to_string(n));
  if (backend == SearchBackend::Auto)
    backend = n <= 6 ? SearchBackend::Sweep : SearchBackend::Orderly;

  if (backend == SearchBackend::Sweep) {
    if (n > 6)
      throw Error(Errc::Unsupported, "sweep search limited to n <= 6");
    return sweep_max(n, constraint, target, threads);
  }

  GraphFamily fam = enumerate_family(n, constraint, EnumBackend::Orderly,
                                     threads);
  SearchReport rep;
  rep.n = n;
  rep.constraint = constraint;
  rep.exhaustive = true;
  rep.labeled_examined = fam.labeled_total();
  Int best = -1;
  for (int i = 0; i < fam.size(); ++i) {
    Int c = count_induced(fam.members[i], target);
    if (c > best) {
      best = c;
      rep.maximizers.assign(1, fam.members[i]);
      rep.maximizer_codes.assign(1, fam.codes[i]);
    } else if (c == best) {
      rep.maximizers.push_back(fam.members[i]);
      rep.maximizer_codes.push_back(fam.codes[i]);
    }
  }
  rep.max_count = best;
  // family codes ascend, so maximizer codes already ascend
  return rep;
}

OrientedGraph clone_delete(const OrientedGraph& g, int x, int y) {
  if (x == y) throw Error(Errc::OutOfRange, "clone and delete target coincide");
  if (x < 0 || x >= g.n || y < 0 || y >= g.n)
    throw Error(Errc::OutOfRange, "vertex out of range");
  OrientedGraph with_clone = clone_vertex(g, x);
  return delete_vertex(with_clone, y);
}

SearchReport local_search(const OrientedGraph& g0, Family constraint,
                          MoveSet moves, std::uint64_t budget) {
  if (constraint == Family::T3Free && !is_t3_free(g0))
    throw Error(Errc::InvalidStart, "start graph has a transitive triangle");
  const int n = g0.n;
  OrientedGraph cur = g0;
  Int cur_count = count_p4(cur);
  std::uint64_t evals = 0;
  bool improved = true;
  while (improved && evals < budget) {
    improved = false;
    OrientedGraph best_g = cur;
    Int best_count = cur_count;
    auto consider = [&](const OrientedGraph& cand) {
      if (evals >= budget) return;
      ++evals;
      Int c = count_p4(cand);
      if (c > best_count) {
        best_count = c;
        best_g = cand;
      }
    };
    if (moves.clone_delete) {
      for (int y = 0; y < n && evals < budget; ++y)
        for (int x = 0; x < n && evals < budget; ++x) {
          if (x == y) continue;
          consider(clone_delete(cur, x, y));
        }
    }
    if (moves.rewire_pair) {
      for (int u = 0; u < n && evals < budget; ++u)
        for (int v = u + 1; v < n && evals < budget; ++v) {
          std::uint8_t old = cur.pairs[pair_index(n, u, v)];
          for (std::uint8_t s = 0; s <= 2 && evals < budget; ++s) {
            if (s == old) continue;
            OrientedGraph cand = cur;
            cand.pairs[pair_index(n, u, v)] = s;
            if (constraint == Family::T3Free && s != 0) {
              bool ok = true;
              for (int w = 0; w < n && ok; ++w) {
                if (w == u || w == v) continue;
                int a = u, b = v, c = w;
                // sort the triple to reuse the row-major code convention
                if (c < a) std::swap(a, c);
                if (c < b) std::swap(b, c);
                if (b < a) std::swap(a, b);
                int code = cand.pairs[pair_index(n, a, b)] +
                           3 * cand.pairs[pair_index(n, a, c)] +
                           9 * cand.pairs[pair_index(n, b, c)];
                ok = !t3_triple_code(code);
              }
              if (!ok) continue;
            }
            consider(cand);
          }
        }
    }
    if (best_count > cur_count) {
      cur = best_g;
      cur_count = best_count;
      improved = true;
    }
  }

  SearchReport rep;
  rep.n = n;
  rep.constraint = constraint;
  rep.exhaustive = false;
  rep.max_count = cur_count;
  rep.labeled_examined = Int(evals);
  if (n <= kMaxCanonicalN) {
    CanonicalInfo info = canonicalize(cur);
    rep.maximizers.push_back(info.rep);
    rep.maximizer_codes.push_back(info.code);
  } else {
    rep.maximizers.push_back(cur);
    rep.maximizer_codes.push_back(format_graph_compact(cur));
  }
  return rep;
}

std::pair<int, Int> vertex_min_participation(const OrientedGraph& g) {
  if (g.n < 4)
    throw Error(Errc::SizeMismatch, "participation needs at least 4 vertices");
  int best_v = 0;
  Int best = -1;
  for (int v = 0; v < g.n; ++v) {
    Int c = count_p4_through(g, VertexSet({v}));
    if (best < 0 || c < best) {
      best = c;
      best_v = v;
    }
  }
  return {best_v, best};
}

}  // namespace indpath
