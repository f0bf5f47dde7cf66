// enumerate.cpp

#include "indpath/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "indpath/canonical.hpp"
#include "indpath/parallel.hpp"

namespace indpath {

namespace {

constexpr int kSweepMaxN = 6;    // 3^15 counter states
constexpr int kFamilySweepN = 5;
constexpr int kOrderlyMaxN = 7;

std::uint64_t pow3(int e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= 3;
  return v;
}

// pair-index triplets of every vertex triple, for fast T3 tests on raw digits
std::vector<std::array<int, 3>> triple_index_list(int n) {
  std::vector<std::array<int, 3>> t;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        t.push_back({pair_index(n, i, j), pair_index(n, i, k),
                     pair_index(n, j, k)});
  return t;
}

bool digits_t3_free(const std::vector<std::uint8_t>& d,
                    const std::vector<std::array<int, 3>>& triples) {
  for (const auto& t : triples) {
    int code = d[t[0]] + 3 * d[t[1]] + 9 * d[t[2]];
    if (t3_triple_code(code)) return false;
  }
  return true;
}

// visits the counter values in [lo, hi) in ascending order; returns the
// number of constraint-satisfying graphs seen
std::uint64_t scan_range(int n, Family constraint, std::uint64_t lo,
                         std::uint64_t hi,
                         const std::function<void(const OrientedGraph&)>* visit) {
  const int m = pair_count(n);
  const auto triples = triple_index_list(n);
  OrientedGraph g(n);
  {
    std::uint64_t v = lo;
    for (int p = 0; p < m; ++p) {
      g.pairs[p] = std::uint8_t(v % 3);
      v /= 3;
    }
  }
  std::uint64_t hits = 0;
  for (std::uint64_t v = lo; v < hi; ++v) {
    if (constraint == Family::AllOriented || digits_t3_free(g.pairs, triples)) {
      ++hits;
      if (visit) (*visit)(g);
    }
    // ternary counter increment, pair (0,1) least significant
    int p = 0;
    while (p < m && g.pairs[p] == 2) g.pairs[p++] = 0;
    if (p < m) ++g.pairs[p];
  }
  return hits;
}

struct Member {
  OrientedGraph rep;
  std::string code;
  std::vector<std::vector<int>> auts;
};

// one-vertex extensions of a canonical parent, orbit-filtered and accepted
// iff the new vertex can sit at the last canonical position
std::vector<Member> extend_parent(const Member& parent, Family constraint) {
  const int s = parent.rep.n;
  std::vector<Member> out;
  std::vector<std::uint8_t> e(s, 0);
  const std::uint64_t total = pow3(s);
  for (std::uint64_t it = 0;; ++it) {
    // orbit-minimality under the parent automorphisms, lex on e[0..s)
    bool keep = true;
    for (const auto& alpha : parent.auts) {
      for (int u = 0; u < s; ++u) {
        std::uint8_t tu = e[alpha[u]];
        if (e[u] != tu) {
          keep = e[u] < tu;
          break;
        }
      }
      if (!keep) break;
    }
    if (keep && constraint == Family::T3Free) {
      for (int u = 0; u < s && keep; ++u) {
        if (e[u] == 0) continue;
        for (int v = u + 1; v < s && keep; ++v) {
          int code = parent.rep.pairs[pair_index(s, u, v)] + 3 * e[u] + 9 * e[v];
          keep = !t3_triple_code(code);
        }
      }
    }
    if (keep) {
      OrientedGraph g(s + 1);
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
          g.set_state(i, j, parent.rep.state(i, j));
      for (int u = 0; u < s; ++u)
        if (e[u]) g.pairs[pair_index(s + 1, u, s)] = e[u];
      CanonicalInfo info = canonicalize(g);
      if (info.last_vertex_canonical)
        out.push_back(Member{std::move(info.rep), std::move(info.code),
                             std::move(info.auts)});
    }
    if (it + 1 == total) break;
    // lex successor: last coordinate counts fastest
    int p = s - 1;
    while (e[p] == 2) e[p--] = 0;
    ++e[p];
  }
  return out;
}

}  // namespace

const char* family_name(Family f) {
  return f == Family::AllOriented ? "all-oriented" : "t3-free";
}

Int GraphFamily::labeled_total() const {
  Int total = 0;
  const Int nf = factorial(n);
  for (auto a : aut_orders) total += nf / Int(a);
  return total;
}

std::uint64_t labeled_sweep(
    int n, Family constraint,
    const std::function<void(const OrientedGraph&)>& visit) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative vertex count");
  if (n > kSweepMaxN)
    throw Error(Errc::Unsupported, "labeled sweep limited to n <= " +
                                       std::to_string(kSweepMaxN));
  return scan_range(n, constraint, 0, pow3(pair_count(n)), &visit);
}

std::uint64_t labeled_sweep_range(
    int n, Family constraint, std::uint64_t lo, std::uint64_t hi,
    const std::function<void(const OrientedGraph&)>& visit) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative vertex count");
  if (n > kSweepMaxN)
    throw Error(Errc::Unsupported, "labeled sweep limited to n <= " +
                                       std::to_string(kSweepMaxN));
  const std::uint64_t total = pow3(pair_count(n));
  if (lo > hi || hi > total)
    throw Error(Errc::OutOfRange, "sweep range outside the counter span");
  if (lo == hi) return 0;
  return scan_range(n, constraint, lo, hi, &visit);
}

std::uint64_t labeled_count(int n, Family constraint, int threads) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative vertex count");
  if (n > kSweepMaxN)
    throw Error(Errc::Unsupported, "labeled sweep limited to n <= " +
                                       std::to_string(kSweepMaxN));
  const std::uint64_t total = pow3(pair_count(n));
  const int nw = resolve_threads(threads);
  const int nblocks = nw == 1 || total < 4096 ? 1 : nw * 4;
  const std::uint64_t len = (total + nblocks - 1) / nblocks;
  auto counts = parallel_blocks<std::uint64_t>(
      nblocks, nw, [&](int b) -> std::uint64_t {
        std::uint64_t lo = (std::uint64_t)b * len;
        std::uint64_t hi = std::min(total, lo + len);
        if (lo >= hi) return 0;
        return scan_range(n, constraint, lo, hi, nullptr);
      });
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

GraphFamily enumerate_family(int n, Family constraint, EnumBackend backend,
                             int threads) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative vertex count");
  if (backend == EnumBackend::Auto)
    backend = n <= kFamilySweepN ? EnumBackend::Sweep : EnumBackend::Orderly;

  GraphFamily fam;
  fam.n = n;
  fam.constraint = constraint;

  if (backend == EnumBackend::Sweep) {
    if (n > kFamilySweepN)
      throw Error(Errc::Unsupported, "sweep enumeration limited to n <= " +
                                         std::to_string(kFamilySweepN));
    std::map<std::string, std::pair<OrientedGraph, std::uint64_t>> classes;
    std::function<void(const OrientedGraph&)> visit =
        [&](const OrientedGraph& g) {
          CanonicalInfo info = canonicalize(g);
          classes.emplace(info.code,
                          std::make_pair(info.rep, info.aut_order()));
        };
    labeled_sweep(n, constraint, visit);
    for (auto& [code, rest] : classes) {
      fam.members.push_back(rest.first);
      fam.codes.push_back(code);
      fam.aut_orders.push_back(rest.second);
    }
    return fam;
  }

  if (n > kOrderlyMaxN)
    throw Error(Errc::Unsupported, "orderly enumeration limited to n <= " +
                                       std::to_string(kOrderlyMaxN));
  const int nw = resolve_threads(threads);
  std::vector<Member> level;
  level.push_back(Member{OrientedGraph(0), "0:", {{}}});
  for (int s = 0; s < n; ++s) {
    const int nparents = (int)level.size();
    const int nblocks = nw == 1 ? 1 : std::min(nparents, nw * 8);
    const int len = (nparents + nblocks - 1) / nblocks;
    auto chunks = parallel_blocks<std::vector<Member>>(
        nblocks, nw, [&](int b) {
          std::vector<Member> acc;
          for (int i = b * len; i < std::min(nparents, (b + 1) * len); ++i) {
            auto kids = extend_parent(level[i], constraint);
            for (auto& k : kids) acc.push_back(std::move(k));
          }
          return acc;
        });
    std::vector<Member> next;
    for (auto& c : chunks)
      for (auto& m : c) next.push_back(std::move(m));
    // orderly acceptance yields each class exactly once, so no dedup
    std::sort(next.begin(), next.end(),
              [](const Member& a, const Member& b) { return a.code < b.code; });
    level = std::move(next);
  }
  for (auto& m : level) {
    fam.codes.push_back(m.code);
    fam.aut_orders.push_back(m.auts.size());
    fam.members.push_back(std::move(m.rep));
  }
  return fam;
}

}  // namespace indpath
