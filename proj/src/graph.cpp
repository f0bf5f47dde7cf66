// graph.cpp

#include "indpath/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace indpath {

// ----- VertexSet -----

VertexSet::VertexSet(std::vector<int> m) : members(std::move(m)) {
  std::sort(members.begin(), members.end());
  for (size_t i = 1; i < members.size(); ++i)
    if (members[i] == members[i - 1])
      throw Error(Errc::OutOfRange,
                  "duplicate vertex " + std::to_string(members[i]));
}

void check_vertex_set(const VertexSet& s, int n) {
  for (int v : s.members)
    if (v < 0 || v >= n)
      throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) +
                                        " not in [0," + std::to_string(n) + ")");
}

// ----- construction -----

OrientedGraph make_graph(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative vertex count");
  OrientedGraph g(n);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::OutOfRange, "arc endpoint out of range: (" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) + ")");
    if (u == v)
      throw Error(Errc::Loop, "loop at vertex " + std::to_string(u));
    std::uint8_t cur = g.state(u, v);
    if (cur == 2)
      throw Error(Errc::TwoCycle, "both directions on pair (" +
                                      std::to_string(u) + "," +
                                      std::to_string(v) + ")");
    g.set_state(u, v, 1);  // repeated identical arcs are harmless
  }
  return g;
}

OrientedGraph directed_path(int k) {
  if (k < 1) throw Error(Errc::OutOfRange, "path needs k >= 1");
  OrientedGraph g(k);
  for (int i = 0; i + 1 < k; ++i) g.set_state(i, i + 1, 1);
  return g;
}

OrientedGraph directed_cycle(int k) {
  if (k < 3) throw Error(Errc::OutOfRange, "cycle needs k >= 3");
  OrientedGraph g = directed_path(k);
  g.set_state(k - 1, 0, 1);
  return g;
}

OrientedGraph transitive_tournament(int k) {
  if (k < 1) throw Error(Errc::OutOfRange, "tournament needs k >= 1");
  OrientedGraph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.set_state(i, j, 1);
  return g;
}

OrientedGraph reverse(const OrientedGraph& g) {
  OrientedGraph r = g;
  for (auto& s : r.pairs) s = flip_state(s);
  return r;
}

// ----- T3 detection -----

bool t3_triple_code(int code) {
  // triple (s01, s02, s12); transitive triangle = all arcs present and not
  // one of the two directed-cycle orientations (1,2,1) and (2,1,2)
  static const auto table = [] {
    std::array<bool, 27> t{};
    for (int c = 0; c < 27; ++c) {
      int s01 = c % 3, s02 = (c / 3) % 3, s12 = c / 9;
      bool all = s01 != 0 && s02 != 0 && s12 != 0;
      bool cyc = (s01 == 1 && s02 == 2 && s12 == 1) ||
                 (s01 == 2 && s02 == 1 && s12 == 2);
      t[c] = all && !cyc;
    }
    return t;
  }();
  return table[code];
}

bool is_t3_free(const OrientedGraph& g) {
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      int sij = g.pairs[pair_index(g.n, i, j)];
      for (int k = j + 1; k < g.n; ++k) {
        int code = sij + 3 * g.pairs[pair_index(g.n, i, k)] +
                   9 * g.pairs[pair_index(g.n, j, k)];
        if (t3_triple_code(code)) return false;
      }
    }
  return true;
}

int quad_code(const OrientedGraph& g, int a, int b, int c, int d) {
  const int n = g.n;
  return g.pairs[pair_index(n, a, b)] + 3 * g.pairs[pair_index(n, a, c)] +
         9 * g.pairs[pair_index(n, a, d)] + 27 * g.pairs[pair_index(n, b, c)] +
         81 * g.pairs[pair_index(n, b, d)] +
         243 * g.pairs[pair_index(n, c, d)];
}

// ----- subgraphs and vertex surgery -----

OrientedGraph induced_subgraph(const OrientedGraph& g, const VertexSet& s) {
  check_vertex_set(s, g.n);
  const auto& m = s.members;
  OrientedGraph h((int)m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      h.set_state((int)i, (int)j, g.state(m[i], m[j]));
  return h;
}

OrientedGraph clone_vertex(const OrientedGraph& g, int x) {
  if (x < 0 || x >= g.n)
    throw Error(Errc::OutOfRange, "clone source " + std::to_string(x));
  OrientedGraph h(g.n + 1);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      h.set_state(i, j, g.state(i, j));
  for (int i = 0; i < g.n; ++i)
    if (i != x) h.set_state(i, g.n, g.state(i, x));
  // pair (x, clone) stays 0: clone and original are non-adjacent
  return h;
}

OrientedGraph delete_vertex(const OrientedGraph& g, int x) {
  if (x < 0 || x >= g.n)
    throw Error(Errc::OutOfRange, "delete target " + std::to_string(x));
  std::vector<int> keep;
  keep.reserve(g.n - 1);
  for (int v = 0; v < g.n; ++v)
    if (v != x) keep.push_back(v);
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

// ----- text formats -----

std::string format_graph_arcs(const OrientedGraph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      std::uint8_t s = g.pairs[pair_index(g.n, i, j)];
      if (s == 1) out << i << " " << j << "\n";
      if (s == 2) out << j << " " << i << "\n";
    }
  return out.str();
}

std::string format_graph_compact(const OrientedGraph& g) {
  std::string s = std::to_string(g.n) + ":";
  for (auto d : g.pairs) s += char('0' + d);
  return s;
}

OrientedGraph parse_graph_compact(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw Error(Errc::ParseError, "compact form needs 'n:digits'");
  int n;
  try {
    size_t used = 0;
    n = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad vertex count in '" + s + "'");
  }
  if (n < 0) throw Error(Errc::ParseError, "negative vertex count");
  std::string digits = s.substr(colon + 1);
  if ((int)digits.size() != pair_count(n))
    throw Error(Errc::ParseError,
                "expected " + std::to_string(pair_count(n)) + " digits, got " +
                    std::to_string(digits.size()));
  OrientedGraph g(n);
  for (size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '2')
      throw Error(Errc::ParseError, "digit out of {0,1,2}");
    g.pairs[i] = std::uint8_t(digits[i] - '0');
  }
  return g;
}

OrientedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> tokens;  // meaningful lines
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    std::string kept;
    while (ls >> tok) kept += (kept.empty() ? "" : " ") + tok;
    if (!kept.empty()) tokens.push_back(kept);
  }
  if (tokens.empty()) throw Error(Errc::ParseError, "empty graph text");
  if (tokens[0].find(':') != std::string::npos)
    return parse_graph_compact(tokens[0]);
  int n;
  try {
    n = std::stoi(tokens[0]);
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad vertex count line '" + tokens[0] + "'");
  }
  std::vector<std::pair<int, int>> arcs;
  for (size_t i = 1; i < tokens.size(); ++i) {
    std::istringstream ls(tokens[i]);
    int u, v;
    if (!(ls >> u >> v))
      throw Error(Errc::ParseError, "bad arc line '" + tokens[i] + "'");
    std::string extra;
    if (ls >> extra)
      throw Error(Errc::ParseError, "trailing tokens in '" + tokens[i] + "'");
    arcs.emplace_back(u, v);
  }
  return make_graph(n, arcs);
}

OrientedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

}  // namespace indpath
