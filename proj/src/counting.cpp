// counting.cpp

#include "indpath/counting.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

#include "indpath/canonical.hpp"

namespace indpath {

namespace {

// ----- small-pattern canonical tables (k = 3, 4, 5) -----

OrientedGraph decode_small(int k, std::uint32_t value) {
  OrientedGraph g(k);
  for (int p = 0; p < pair_count(k); ++p) {
    g.pairs[p] = std::uint8_t(value % 3);
    value /= 3;
  }
  return g;
}

std::uint32_t encode_small(const OrientedGraph& g) {
  std::uint32_t v = 0, w = 1;
  for (auto d : g.pairs) {
    v += w * d;
    w *= 3;
  }
  return v;
}

// maps every row-major code value to the least value in its relabeling orbit,
// and each orbit minimum to the public canonical code string
struct CanonTable {
  int k;
  std::vector<std::uint32_t> min_code;
  std::unordered_map<std::uint32_t, std::string> public_key;

  explicit CanonTable(int kk) : k(kk) {
    const int m = pair_count(k);
    std::uint32_t total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    min_code.assign(total, UINT32_MAX);

    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::uint32_t> pw(m);
    for (int i = 0; i < m; ++i) pw[i] = i == 0 ? 1 : pw[i - 1] * 3;

    std::vector<std::uint32_t> orbit;
    for (std::uint32_t v = 0; v < total; ++v) {
      if (min_code[v] != UINT32_MAX) continue;
      OrientedGraph g = decode_small(k, v);
      orbit.clear();
      std::uint32_t vmin = UINT32_MAX;
      for (const auto& perm : perms) {
        std::uint32_t w = 0;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            w += pw[pair_index(k, i, j)] * g.state(perm[i], perm[j]);
        orbit.push_back(w);
        vmin = std::min(vmin, w);
      }
      for (std::uint32_t w : orbit) min_code[w] = vmin;
      public_key.emplace(vmin, canonicalize(decode_small(k, vmin)).code);
    }
  }
};

const CanonTable& canon_table(int k) {
  static const CanonTable t3(3), t4(4), t5(5);
  switch (k) {
    case 3: return t3;
    case 4: return t4;
    default: return t5;
  }
}

const std::array<bool, 729>& p4_lut() {
  static const auto lut = [] {
    std::array<bool, 729> t{};
    const auto& c4 = canon_table(4);
    const std::uint32_t target = c4.min_code[encode_small(directed_path(4))];
    for (int c = 0; c < 729; ++c) t[c] = c4.min_code[c] == target;
    return t;
  }();
  return lut;
}

// ----- subset iteration -----

// calls fn on every ascending k-subset of [0, n)
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// row-major code of the subgraph induced on an ascending vertex list; the
// (i,j) loop below enumerates pairs exactly in row-major order, so sequential
// powers of 3 match pair_index weights
std::uint32_t subset_code(const OrientedGraph& g, const std::vector<int>& v) {
  const int k = (int)v.size();
  std::uint32_t code = 0, w = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      code += w * g.pairs[pair_index(g.n, v[i], v[j])];
      w *= 3;
    }
  return code;
}

}  // namespace

bool quad_is_p4(int code) { return p4_lut()[code]; }

Int count_induced(const OrientedGraph& g, const OrientedGraph& h) {
  const int n = g.n, k = h.n;
  if (k > n)
    throw Error(Errc::SizeMismatch, "pattern on " + std::to_string(k) +
                                        " vertices, host has only " +
                                        std::to_string(n));
  if (k == 0) return 1;
  if (k == 1) return n;
  if (k == 2) {
    int adj = 0;
    for (auto s : g.pairs) adj += (s != 0);
    return h.pairs[0] == 0 ? Int(pair_count(n) - adj) : Int(adj);
  }
  std::uint64_t count = 0;
  if (k <= 5) {
    const auto& tab = canon_table(k);
    const std::uint32_t target = tab.min_code[encode_small(h)];
    for_each_subset(n, k, [&](const std::vector<int>& v) {
      count += tab.min_code[subset_code(g, v)] == target;
    });
    return Int(count);
  }
  if (k > kMaxCanonicalN)
    throw Error(Errc::Unsupported,
                "pattern too large: n = " + std::to_string(k));
  const std::string target = canonicalize(h).code;
  std::unordered_map<std::string, bool> memo;
  for_each_subset(n, k, [&](const std::vector<int>& v) {
    OrientedGraph sub = induced_subgraph(g, VertexSet(std::vector<int>(v)));
    std::string raw = format_graph_compact(sub);
    auto it = memo.find(raw);
    if (it == memo.end())
      it = memo.emplace(raw, canonicalize(sub).code == target).first;
    count += it->second;
  });
  return Int(count);
}

Rat density(const OrientedGraph& g, const OrientedGraph& h) {
  Int c = count_induced(g, h);
  return Rat(c, binomial(g.n, h.n));
}

Int count_p4(const OrientedGraph& g) {
  const int n = g.n;
  if (n < 4) return 0;
  const auto& lut = p4_lut();
  const auto& P = g.pairs;
  std::uint64_t count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int sab = P[pair_index(n, a, b)];
      for (int c = b + 1; c < n; ++c) {
        const int base =
            sab + 3 * P[pair_index(n, a, c)] + 27 * P[pair_index(n, b, c)];
        for (int d = c + 1; d < n; ++d) {
          const int code = base + 9 * P[pair_index(n, a, d)] +
                           81 * P[pair_index(n, b, d)] +
                           243 * P[pair_index(n, c, d)];
          count += lut[code];
        }
      }
    }
  return Int(count);
}

Int count_p4_through(const OrientedGraph& g, const VertexSet& a) {
  check_vertex_set(a, g.n);
  const int fixed = a.size();
  if (fixed > 4)
    throw Error(Errc::SizeMismatch, "through-set larger than the pattern");
  if (g.n < 4) return 0;
  const auto& lut = p4_lut();
  std::vector<int> others;
  others.reserve(g.n - fixed);
  {
    size_t ai = 0;
    for (int v = 0; v < g.n; ++v) {
      if (ai < a.members.size() && a.members[ai] == v) {
        ++ai;
        continue;
      }
      others.push_back(v);
    }
  }
  const int r = 4 - fixed;
  std::uint64_t count = 0;
  std::vector<int> quad(4);
  for_each_subset((int)others.size(), r, [&](const std::vector<int>& pick) {
    size_t ai = 0, pi = 0;
    for (int t = 0; t < 4; ++t) {
      bool take_a = ai < a.members.size() &&
                    (pi >= pick.size() || a.members[ai] < others[pick[pi]]);
      quad[t] = take_a ? a.members[ai++] : others[pick[pi++]];
    }
    count += lut[quad_code(g, quad[0], quad[1], quad[2], quad[3])];
  });
  return Int(count);
}

std::map<std::string, Int> induced_profile(const OrientedGraph& g, int k) {
  const int n = g.n;
  if (k > n)
    throw Error(Errc::SizeMismatch, "profile order " + std::to_string(k) +
                                        " exceeds host size " +
                                        std::to_string(n));
  if (k < 0) throw Error(Errc::OutOfRange, "negative profile order");
  std::map<std::string, Int> out;
  if (k == 0) {
    out["0:"] = 1;
    return out;
  }
  if (k == 1) {
    out["1:"] = n;
    return out;
  }
  if (k == 2) {
    Int adj = 0;
    for (auto s : g.pairs) adj += (s != 0);
    if (pair_count(n) - adj > 0) out["2:0"] = Int(pair_count(n)) - adj;
    if (adj > 0) out["2:1"] = adj;
    return out;
  }
  if (k <= 5) {
    const auto& tab = canon_table(k);
    std::unordered_map<std::uint32_t, std::uint64_t> hist;
    for_each_subset(n, k, [&](const std::vector<int>& v) {
      ++hist[tab.min_code[subset_code(g, v)]];
    });
    for (const auto& [vmin, cnt] : hist) out[tab.public_key.at(vmin)] = Int(cnt);
    return out;
  }
  if (k > kMaxCanonicalN)
    throw Error(Errc::Unsupported, "profile order too large");
  std::unordered_map<std::string, std::string> memo;  // raw -> canonical
  for_each_subset(n, k, [&](const std::vector<int>& v) {
    OrientedGraph sub = induced_subgraph(g, VertexSet(std::vector<int>(v)));
    std::string raw = format_graph_compact(sub);
    auto it = memo.find(raw);
    if (it == memo.end()) it = memo.emplace(raw, canonicalize(sub).code).first;
    out[it->second] += 1;
  });
  return out;
}

}  // namespace indpath
