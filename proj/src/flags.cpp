// flags.cpp

#include "indpath/flags.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "indpath/counting.hpp"
#include "indpath/parallel.hpp"

namespace indpath {

namespace {

constexpr int kThetaDenominator = 180;  // 30 ordered pairs * 6 ordered splits

// decimal that round-trips exactly through double
std::string double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string double17(const Rat& r) { return double17(r.convert_to<double>()); }

// upper-triangular (1-based, a <= b) position in row-major order
int tri_index(int s, int a, int b) {
  return (a - 1) * s - (a - 1) * (a - 2) / 2 + (b - a);
}

const std::array<std::array<int, 2>, 6>& splits2of4() {
  static const std::array<std::array<int, 2>, 6> s = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return s;
}

int split_complement(int which, int slot) {
  // complement pair of splits2of4()[which], ascending
  static const std::array<std::array<int, 2>, 6> c = {
      {{2, 3}, {1, 3}, {1, 2}, {0, 3}, {0, 2}, {0, 1}}};
  return c[which][slot];
}

}  // namespace

std::string flag_id_of(const OrientedGraph& g, int v0, int v1, int a, int b) {
  auto digits = [&](int w2, int w3) {
    std::string s(6, '0');
    const int w[4] = {v0, v1, w2, w3};
    int p = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) s[p++] = char('0' + g.state(w[i], w[j]));
    return s;
  };
  return std::min(digits(a, b), digits(b, a));
}

Rat FlagBasis::pair_density(int t, int h, int i, int j) const {
  const int s = flag_count(t);
  return Rat(counts[t][h][i * s + j], kThetaDenominator);
}

FlagBasis build_basis(int threads) {
  FlagBasis basis;
  basis.type_codes = {"2:0", "2:1"};

  // flags: labeled 4-vertex T3-free graphs, type = the (0,1) pair state
  std::set<std::string> ids[2];
  std::function<void(const OrientedGraph&)> visit =
      [&](const OrientedGraph& g) {
        int st = g.pairs[pair_index(4, 0, 1)];
        if (st <= 1) ids[st].insert(flag_id_of(g, 0, 1, 2, 3));
      };
  labeled_sweep(4, Family::T3Free, visit);
  basis.flag_ids.assign(2, {});
  for (int t = 0; t < 2; ++t)
    basis.flag_ids[t].assign(ids[t].begin(), ids[t].end());

  basis.family6 = enumerate_family(6, Family::T3Free, EnumBackend::Orderly,
                                   threads);

  std::unordered_map<std::string, int> index[2];
  for (int t = 0; t < 2; ++t)
    for (int i = 0; i < basis.flag_count(t); ++i)
      index[t].emplace(basis.flag_ids[t][i], i);

  const int nh = basis.family6.size();
  basis.counts.assign(2, {});
  for (int t = 0; t < 2; ++t) {
    const int s = basis.flag_count(t);
    basis.counts[t].assign(nh, std::vector<std::uint32_t>(s * s, 0));
  }

  const int nw = resolve_threads(threads);
  const int nblocks = nw == 1 ? 1 : std::min(nh, nw * 4);
  const int len = (nh + nblocks - 1) / nblocks;
  parallel_blocks<int>(nblocks, nw, [&](int b) {
    for (int h = b * len; h < std::min(nh, (b + 1) * len); ++h) {
      const OrientedGraph& H = basis.family6.members[h];
      for (int v0 = 0; v0 < 6; ++v0)
        for (int v1 = 0; v1 < 6; ++v1) {
          if (v0 == v1) continue;
          int st = H.state(v0, v1);
          if (st > 1) continue;
          int rest[4], r = 0;
          for (int v = 0; v < 6; ++v)
            if (v != v0 && v != v1) rest[r++] = v;
          const int s = basis.flag_count(st);
          auto& mat = basis.counts[st][h];
          for (int w = 0; w < 6; ++w) {
            const auto& sp = splits2of4()[w];
            int i = index[st].at(
                flag_id_of(H, v0, v1, rest[sp[0]], rest[sp[1]]));
            int j = index[st].at(flag_id_of(H, v0, v1,
                                            rest[split_complement(w, 0)],
                                            rest[split_complement(w, 1)]));
            ++mat[i * s + j];
          }
        }
    }
    return 0;
  });
  return basis;
}

std::vector<Rat> target_vector(const FlagBasis& basis) {
  std::vector<Rat> c;
  c.reserve(basis.family6.size());
  for (const auto& H : basis.family6.members)
    c.push_back(Rat(count_p4(H), binomial(6, 4)));
  return c;
}

// ----- SDP export -----

void export_sdp(const FlagBasis& basis, const std::string& path,
                const Rat& claimed_bound) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path + "'");
  const int s0 = basis.flag_count(0);
  const int s1 = basis.flag_count(1);
  const int nh = basis.family6.size();
  const int q0 = s0 * (s0 + 1) / 2;
  const int q1 = s1 * (s1 + 1) / 2;
  const int mdim = 1 + q0 + q1;
  const auto c_h = target_vector(basis);

  out << "* directed 4-path density bound over T3-free oriented graphs\n";
  out << "* variables: lambda, then upper-triangular entries of Q0 (" << s0
      << "x" << s0 << ") and Q1 (" << s1 << "x" << s1 << ")\n";
  out << "* per-class constraint: lambda - c_H - sum_t <Q_t, P_t(H)> >= 0\n";
  out << "* claimed bound: " << rat_str(claimed_bound) << " (~"
      << rat_decimal(claimed_bound) << ")\n";
  out << mdim << "\n";
  out << 3 << "\n";
  out << s0 << " " << s1 << " " << -nh << "\n";
  out << "1.0";
  for (int i = 1; i < mdim; ++i) out << " 0.0";
  out << "\n";

  // F0: the c_H constants on the diagonal slack block
  for (int h = 0; h < nh; ++h)
    if (c_h[h] != 0)
      out << "0 3 " << h + 1 << " " << h + 1 << " " << double17(c_h[h])
          << "\n";
  // lambda multiplies the identity on the slack block
  for (int h = 0; h < nh; ++h)
    out << "1 3 " << h + 1 << " " << h + 1 << " 1.0\n";
  // each Q entry: its PSD-block position plus its per-class contribution;
  // variable 1 is lambda, so Q matnos start at 2
  for (int t = 0; t < 2; ++t) {
    const int s = basis.flag_count(t);
    const int base = 2 + (t == 0 ? 0 : q0);
    for (int a = 1; a <= s; ++a)
      for (int b = a; b <= s; ++b) {
        const int matno = base + tri_index(s, a, b);
        out << matno << " " << t + 1 << " " << a << " " << b << " 1.0\n";
        const int mult = a == b ? 1 : 2;
        for (int h = 0; h < nh; ++h) {
          std::uint32_t n = basis.counts[t][h][(a - 1) * s + (b - 1)];
          if (n == 0) continue;
          Rat coef = Rat(-(long long)mult * n, kThetaDenominator);
          out << matno << " 3 " << h + 1 << " " << h + 1 << " "
              << double17(coef) << "\n";
        }
      }
  }
  if (!out) throw Error(Errc::IoError, "failed writing '" + path + "'");
}

SdpFile parse_sdp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::string cleaned;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t");
    if (pos != std::string::npos &&
        (line[pos] == '*' || line[pos] == '"'))
      continue;
    for (char& ch : line)
      if (ch == ',' || ch == '(' || ch == ')' || ch == '{' || ch == '}')
        ch = ' ';
    cleaned += line;
    cleaned += "\n";
  }
  std::istringstream ts(cleaned);
  SdpFile f;
  int nblock = 0;
  if (!(ts >> f.mdim >> nblock))
    throw Error(Errc::ParseError, "missing dimensions");
  if (f.mdim <= 0 || nblock <= 0)
    throw Error(Errc::ParseError, "dimensions must be positive");
  f.block_sizes.resize(nblock);
  for (int b = 0; b < nblock; ++b)
    if (!(ts >> f.block_sizes[b]))
      throw Error(Errc::ParseError, "missing block sizes");
  f.cost.resize(f.mdim);
  for (int i = 0; i < f.mdim; ++i)
    if (!(ts >> f.cost[i])) throw Error(Errc::ParseError, "missing cost row");
  int matno, block, i, j;
  double v;
  while (ts >> matno >> block >> i >> j >> v)
    f.entries.emplace_back(matno, block, i, j, v);
  if (!ts.eof()) {
    std::string tail;
    ts.clear();
    ts >> tail;
    if (!tail.empty())
      throw Error(Errc::ParseError, "malformed entry near '" + tail + "'");
  }
  return f;
}

// ----- certificates -----

SdpCertificate load_certificate_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw Error(Errc::IoError, "'" + dir + "' is not a directory");
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  SdpCertificate cert;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
    std::string cleaned, line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      cleaned += line;
      cleaned += "\n";
    }
    std::istringstream ts(cleaned);
    std::string kw, code;
    if (!(ts >> kw >> code) || kw != "type")
      throw Error(Errc::ParseError, path + ": expected 'type <code>'");
    std::string kw2;
    long long size = 0;
    if (!(ts >> kw2 >> size) || kw2 != "size" || size <= 0)
      throw Error(Errc::ParseError, path + ": expected 'size <s>'");
    std::vector<std::vector<Rat>> m((size_t)size,
                                    std::vector<Rat>((size_t)size));
    for (long long r = 0; r < size; ++r)
      for (long long c = 0; c < size; ++c) {
        std::string tok;
        if (!(ts >> tok))
          throw Error(Errc::ParseError, path + ": matrix ends early");
        m[r][c] = parse_rat(tok);
      }
    std::string extra;
    if (ts >> extra)
      throw Error(Errc::ParseError, path + ": trailing content '" + extra + "'");
    for (long long r = 0; r < size; ++r)
      for (long long c = r + 1; c < size; ++c)
        if (m[r][c] != m[c][r])
          throw Error(Errc::ShapeMismatch,
                      path + ": block is not symmetric at (" +
                          std::to_string(r + 1) + "," + std::to_string(c + 1) +
                          ")");
    for (const auto& [existing, _] : cert.blocks)
      if (existing == code)
        throw Error(Errc::ShapeMismatch, "duplicate block for type " + code);
    cert.blocks.emplace_back(code, std::move(m));
  }
  return cert;
}

PsdResult check_psd(const std::vector<std::vector<Rat>>& m) {
  const size_t s = m.size();
  for (const auto& row : m)
    if (row.size() != s)
      throw Error(Errc::ShapeMismatch, "matrix is not square");
  for (size_t r = 0; r < s; ++r)
    for (size_t c = r + 1; c < s; ++c)
      if (m[r][c] != m[c][r])
        throw Error(Errc::ShapeMismatch, "matrix is not symmetric");

  std::vector<std::vector<Rat>> w = m;
  for (size_t k = 0; k < s; ++k) {
    const Rat d = w[k][k];
    if (d < 0)
      return {false, "negative diagonal value at position " +
                         std::to_string(k + 1)};
    if (d == 0) {
      for (size_t c = k + 1; c < s; ++c)
        if (w[k][c] != 0)
          return {false, "zero pivot with nonzero row at position " +
                             std::to_string(k + 1)};
      continue;  // zero row and column: drop and move on
    }
    for (size_t r = k + 1; r < s; ++r) {
      if (w[r][k] == 0) continue;
      const Rat f = w[r][k] / d;
      for (size_t c = r; c < s; ++c) w[r][c] -= f * w[k][c];
    }
    // only the upper triangle is updated; mirror for the next pivot column
    for (size_t r = k + 1; r < s; ++r)
      for (size_t c = k + 1; c < r; ++c) w[r][c] = w[c][r];
  }
  return {true, ""};
}

Verdict verify_certificate(const FlagBasis& basis, const SdpCertificate& cert,
                           const Rat& bound) {
  // map blocks onto basis types; absent blocks count as zero matrices
  std::vector<const std::vector<std::vector<Rat>>*> q(basis.type_count(),
                                                      nullptr);
  for (const auto& [code, block] : cert.blocks) {
    auto it = std::find(basis.type_codes.begin(), basis.type_codes.end(), code);
    if (it == basis.type_codes.end())
      throw Error(Errc::InvalidSpec, "certificate block for unknown type '" +
                                         code + "'");
    int t = (int)(it - basis.type_codes.begin());
    if ((int)block.size() != basis.flag_count(t))
      throw Error(Errc::ShapeMismatch,
                  "type " + code + " block is " +
                      std::to_string(block.size()) + "x" +
                      std::to_string(block.size()) + ", basis has " +
                      std::to_string(basis.flag_count(t)) + " flags");
    q[t] = &block;
  }

  Verdict verdict;
  for (int t = 0; t < basis.type_count(); ++t) {
    if (!q[t]) continue;
    PsdResult psd = check_psd(*q[t]);
    if (!psd.psd) {
      verdict.kind = Verdict::NotPsd;
      verdict.detail = basis.type_codes[t] + ": " + psd.reason;
      return verdict;
    }
  }

  const auto c_h = target_vector(basis);
  const int nh = basis.family6.size();
  bool failed = false;
  for (int h = 0; h < nh; ++h) {
    Rat lhs = c_h[h];
    for (int t = 0; t < basis.type_count(); ++t) {
      if (!q[t]) continue;
      const int s = basis.flag_count(t);
      const auto& mat = basis.counts[t][h];
      Rat acc = 0;
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
          std::uint32_t n = mat[i * s + j];
          if (n) acc += (*q[t])[i][j] * n;
        }
      lhs += acc / kThetaDenominator;
    }
    if (h == 0 || lhs > verdict.max_lhs) verdict.max_lhs = lhs;
    if (lhs > bound && !failed) {
      failed = true;
      verdict.kind = Verdict::FailsAtClass;
      verdict.detail = basis.family6.codes[h];
    }
    if (lhs == bound) verdict.tight_classes.push_back(basis.family6.codes[h]);
  }
  if (!failed) verdict.kind = Verdict::ProvesBound;
  return verdict;
}

}  // namespace indpath
