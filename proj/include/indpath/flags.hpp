// flags.hpp
// Plain flag-algebra machinery for the directed 4-path density bound over
// T3-free graphs: 4-vertex flags over the two 2-vertex types (non-arc, arc),
// exact pair-density tensors over the 6-vertex T3-free classes, sparse SDP
// export for external solvers, and exact rational verification of positive
// semidefinite certificates.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indpath/enumerate.hpp"
#include "indpath/graph.hpp"
#include "indpath/numbers.hpp"

namespace indpath {

// ----- basis -----

// a flag is a 4-vertex T3-free graph whose first two vertices carry the type;
// its id is the 6-digit pair-state string on vertices [t0,t1,a,b], minimized
// over swapping a and b
struct FlagBasis {
  std::vector<std::string> type_codes;   // "2:0" (non-arc), "2:1" (arc)
  std::vector<std::vector<std::string>> flag_ids;  // per type, sorted
  GraphFamily family6;                   // 6-vertex T3-free classes
  // counts[t][h][i * s_t + j] = number of ordered (theta, S, T) triples in
  // member h realizing flags (i, j) of type t; theta runs over the 30 ordered
  // vertex pairs, (S, T) over the 6 ordered splits of the remaining four
  std::vector<std::vector<std::vector<std::uint32_t>>> counts;

  int type_count() const { return (int)type_codes.size(); }
  int flag_count(int t) const { return (int)flag_ids[t].size(); }
  // p(F_i, F_j; H) = counts / 180
  Rat pair_density(int t, int h, int i, int j) const;
};

FlagBasis build_basis(int threads = 0);

// flag id of (theta = (v0, v1), pair {a, b}) inside g
std::string flag_id_of(const OrientedGraph& g, int v0, int v1, int a, int b);

// c_H = density(H, P4) per family member (order matches family6)
std::vector<Rat> target_vector(const FlagBasis& basis);

// ----- SDP export -----

// sparse block format: minimize lambda subject to, per 6-vertex class H,
// lambda - c_H - sum_t <Q_t, P_t(H)> >= 0 with one PSD block per type and a
// diagonal slack block holding the per-H constraints. claimed_bound goes
// into the header comment only. Entries are decimals rendered from exact
// rationals at 17 significant digits.
void export_sdp(const FlagBasis& basis, const std::string& path,
                const Rat& claimed_bound);

// parsed-back structure for round-trip checks
struct SdpFile {
  int mdim = 0;
  std::vector<int> block_sizes;  // negative = diagonal
  std::vector<double> cost;
  // entries[(matno, block, i, j)] = value, 1-based as written
  std::vector<std::tuple<int, int, int, int, double>> entries;
};
SdpFile parse_sdp_file(const std::string& path);

// ----- certificates -----

struct SdpCertificate {
  // one symmetric rational matrix per present type, keyed by type code
  std::vector<std::pair<std::string, std::vector<std::vector<Rat>>>> blocks;
};

// directory of block files, each: "type <code>" / "size <s>" / s rows of s
// rational entries; files read in name order
SdpCertificate load_certificate_dir(const std::string& dir);

// exact PSD decision for a symmetric rational matrix (Schur elimination)
struct PsdResult {
  bool psd = false;
  std::string reason;  // empty when psd
};
PsdResult check_psd(const std::vector<std::vector<Rat>>& m);

struct Verdict {
  enum Kind { ProvesBound, FailsAtClass, NotPsd } kind = ProvesBound;
  std::string detail;              // failing class code or type code
  Rat max_lhs;                     // max over H of c_H + sum_t <Q_t, P_t(H)>
  std::vector<std::string> tight_classes;  // lhs == bound exactly
};

// exact verification that the certificate proves d <= bound
Verdict verify_certificate(const FlagBasis& basis, const SdpCertificate& cert,
                           const Rat& bound);

}  // namespace indpath
