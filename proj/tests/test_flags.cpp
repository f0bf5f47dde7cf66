// test_flags.cpp
// Flag basis construction, pair-density tensors, SDP export round trip, the
// exact PSD checker, and certificate verification.

#include "doctest.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "indpath/canonical.hpp"
#include "indpath/constructions.hpp"
#include "indpath/counting.hpp"
#include "indpath/flags.hpp"
#include "indpath/graph.hpp"

#include "test_util.hpp"

using namespace indpath;
using testutil::throws_errc;

namespace {

const FlagBasis& basis() {
  static const FlagBasis b = build_basis();
  return b;
}

using Mat = std::vector<std::vector<Rat>>;

Mat zero_mat(int s) { return Mat(s, std::vector<Rat>(s, Rat(0))); }

SdpCertificate zero_certificate() {
  SdpCertificate cert;
  cert.blocks.emplace_back("2:0", zero_mat(basis().flag_count(0)));
  cert.blocks.emplace_back("2:1", zero_mat(basis().flag_count(1)));
  return cert;
}

// PSD oracle for 3x3 symmetric matrices: all seven principal minors >= 0
bool psd3_by_minors(const Mat& m) {
  auto det2 = [&](int a, int b) {
    return m[a][a] * m[b][b] - m[a][b] * m[b][a];
  };
  Rat det3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return m[0][0] >= 0 && m[1][1] >= 0 && m[2][2] >= 0 && det2(0, 1) >= 0 &&
         det2(0, 2) >= 0 && det2(1, 2) >= 0 && det3 >= 0;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_SUITE("flags") {

TEST_CASE("basis shape") {
  const FlagBasis& b = basis();
  CHECK(b.type_codes == std::vector<std::string>{"2:0", "2:1"});
  CHECK(b.flag_count(0) == 81);
  CHECK(b.flag_count(1) == 44);
  CHECK(b.family6.size() == 1107);
  CHECK(b.counts.size() == 2);
  CHECK(b.counts[0].size() == 1107);
  CHECK(b.counts[1].size() == 1107);
}

TEST_CASE("flag ids are well-formed and type-consistent") {
  const FlagBasis& b = basis();
  for (int t = 0; t < 2; ++t) {
    std::set<std::string> seen;
    for (const auto& id : b.flag_ids[t]) {
      REQUIRE(id.size() == 6);
      for (char ch : id) CHECK((ch >= '0' && ch <= '2'));
      // first digit is the type pair's state
      CHECK(id[0] == (t == 0 ? '0' : '1'));
      CHECK(seen.insert(id).second);
    }
    CHECK(std::is_sorted(b.flag_ids[t].begin(), b.flag_ids[t].end()));
  }
}

TEST_CASE("flag_id_of is invariant under swapping the unlabeled pair") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    OrientedGraph g = testutil::random_t3_free(6, rng);
    int v0 = (int)(rng() % 6), v1 = (int)(rng() % 6);
    if (v0 == v1) continue;
    int a = -1, c = -1;
    for (int v = 0; v < 6 && c < 0; ++v) {
      if (v == v0 || v == v1) continue;
      if (a < 0)
        a = v;
      else
        c = v;
    }
    CHECK(flag_id_of(g, v0, v1, a, c) == flag_id_of(g, v0, v1, c, a));
  }
}

TEST_CASE("count tensors are symmetric and total correctly") {
  const FlagBasis& b = basis();
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    int h = (int)(rng() % b.family6.size());
    const OrientedGraph& H = b.family6.members[h];
    std::uint64_t total = 0;
    for (int t = 0; t < 2; ++t) {
      const int s = b.flag_count(t);
      const auto& mat = b.counts[t][h];
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
          CHECK(mat[i * s + j] == mat[j * s + i]);
          total += mat[i * s + j];
        }
    }
    CHECK(total == 6u * (30u - (unsigned)H.arc_count()));
  }
}

TEST_CASE("pair densities are normalized") {
  const FlagBasis& b = basis();
  // per (theta, split) the count is one: densities over a class sum to
  // (30 - arcs)/30 per the skipped reversed-arc thetas
  int h = 0;
  Rat sum(0);
  for (int t = 0; t < 2; ++t)
    for (int i = 0; i < b.flag_count(t); ++i)
      for (int j = 0; j < b.flag_count(t); ++j)
        sum += b.pair_density(t, h, i, j);
  const OrientedGraph& H = b.family6.members[0];
  CHECK(sum == Rat(6 * (30 - H.arc_count()), 180));
}

TEST_CASE("target vector") {
  const FlagBasis& b = basis();
  std::vector<Rat> c = target_vector(b);
  REQUIRE((int)c.size() == 1107);
  Rat mx(0);
  int tight = 0;
  for (int h = 0; h < 1107; ++h) {
    CHECK(c[h] == density(b.family6.members[h], directed_path(4)));
    if (c[h] > mx) mx = c[h];
  }
  for (const Rat& v : c) tight += (v == Rat(3, 5));
  CHECK(mx == Rat(3, 5));
  CHECK(tight == 1);
  // the unique maximum sits at the doubled-class cycle blow-up
  OrientedGraph best = balanced_blow_up(directed_cycle(5), 6);
  std::string best_code = canonical_form(best).code;
  bool found = false;
  for (int h = 0; h < 1107; ++h)
    if (c[h] == Rat(3, 5)) found = (b.family6.codes[h] == best_code);
  CHECK(found);
}

TEST_CASE("sdp export round trip") {
  namespace fs = std::filesystem;
  fs::path path = fs::path("indpath_test_sdp.dat");
  export_sdp(basis(), path.string(), Rat(24, 125));
  SdpFile f = parse_sdp_file(path.string());
  CHECK(f.mdim == 4312);
  CHECK(f.block_sizes == std::vector<int>{81, 44, -1107});
  REQUIRE((int)f.cost.size() == 4312);
  CHECK(f.cost[0] == 1.0);
  for (int i = 1; i < 4312; ++i) CHECK(f.cost[i] == 0.0);

  int lambda_rows = 0, f0_rows = 0, psd_rows = 0;
  int max_matno = 0;
  for (const auto& [matno, block, i, j, v] : f.entries) {
    max_matno = std::max(max_matno, matno);
    if (matno == 0) {
      ++f0_rows;
      CHECK(block == 3);
      CHECK(i == j);
      CHECK(v > 0);
    } else if (matno == 1) {
      ++lambda_rows;
      CHECK(block == 3);
      CHECK(i == j);
      CHECK(v == 1.0);
    } else if (block != 3) {
      ++psd_rows;
      CHECK((block == 1 || block == 2));
      CHECK(v == 1.0);
      CHECK(i <= j);
    }
  }
  CHECK(lambda_rows == 1107);
  CHECK(f0_rows > 0);
  CHECK(f0_rows < 1107);
  // one PSD-position row per upper-triangular Q entry
  CHECK(psd_rows == 81 * 82 / 2 + 44 * 45 / 2);
  CHECK(max_matno == 4312);
  fs::remove(path);
}

TEST_CASE("sdp parser rejects malformed files") {
  namespace fs = std::filesystem;
  auto bad = [&](const std::string& text) {
    fs::path p = fs::path("indpath_test_bad_sdp.dat");
    write_file(p, text);
    bool threw = throws_errc([&] { parse_sdp_file(p.string()); },
                             Errc::ParseError);
    fs::remove(p);
    return threw;
  };
  CHECK(bad(""));
  CHECK(bad("4312\n"));
  CHECK(bad("3\n2\n1\n"));              // missing second block size
  CHECK(bad("2\n1\n2\n1.0\n"));         // cost row ends early
  CHECK(bad("2\n1\n2\n1.0 0.0\n1 1 1 1 x\n"));
  CHECK(throws_errc([] { parse_sdp_file("no_such_file.dat"); }, Errc::IoError));
}

TEST_CASE("psd checker basics") {
  CHECK(check_psd({}).psd);
  CHECK(check_psd({{Rat(0)}}).psd);
  CHECK(check_psd({{Rat(2)}}).psd);
  CHECK_FALSE(check_psd({{Rat(-1)}}).psd);
  CHECK(check_psd({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}).psd);
  CHECK_FALSE(check_psd({{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}).psd);
  CHECK_FALSE(check_psd({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}).psd);
  CHECK(check_psd(zero_mat(4)).psd);
  // diag(0, 1) is fine: zero pivot with zero row
  CHECK(check_psd({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}}).psd);
  CHECK(throws_errc([] { check_psd({{Rat(1), Rat(2)}}); }, Errc::ShapeMismatch));
  CHECK(throws_errc(
      [] { check_psd({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}); },
      Errc::ShapeMismatch));
}

TEST_CASE("psd checker agrees with the minor oracle on random 3x3") {
  std::mt19937_64 rng(123);
  int psd_seen = 0, npsd_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Mat m = zero_mat(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        Rat v((int)(rng() % 9) - 4, 1 + (int)(rng() % 3));
        m[i][j] = m[j][i] = v;
      }
    bool expect = psd3_by_minors(m);
    CHECK(check_psd(m).psd == expect);
    (expect ? psd_seen : npsd_seen)++;
  }
  CHECK(psd_seen > 0);
  CHECK(npsd_seen > 0);
}

TEST_CASE("zero certificate proves the trivial bound") {
  Verdict v = verify_certificate(basis(), zero_certificate(), Rat(3, 5));
  CHECK(v.kind == Verdict::ProvesBound);
  CHECK(v.max_lhs == Rat(3, 5));
  REQUIRE(v.tight_classes.size() == 1);
  CHECK(v.tight_classes[0] ==
        canonical_form(balanced_blow_up(directed_cycle(5), 6)).code);
}

TEST_CASE("zero certificate fails a strict bound") {
  Verdict v = verify_certificate(basis(), zero_certificate(), Rat(24, 125));
  CHECK(v.kind == Verdict::FailsAtClass);
  CHECK(!v.detail.empty());
  CHECK(v.max_lhs == Rat(3, 5));
}

TEST_CASE("non-psd certificates are rejected up front") {
  SdpCertificate cert = zero_certificate();
  cert.blocks[0].second[0][0] = Rat(-1);
  Verdict v = verify_certificate(basis(), cert, Rat(3, 5));
  CHECK(v.kind == Verdict::NotPsd);
  CHECK(v.detail.find("2:0") == 0);
}

TEST_CASE("certificate block validation") {
  SdpCertificate unknown;
  unknown.blocks.emplace_back("3:0", zero_mat(5));
  CHECK(throws_errc([&] { verify_certificate(basis(), unknown, Rat(1)); },
                    Errc::InvalidSpec));
  SdpCertificate wrong;
  wrong.blocks.emplace_back("2:0", zero_mat(5));
  CHECK(throws_errc([&] { verify_certificate(basis(), wrong, Rat(1)); },
                    Errc::ShapeMismatch));
}

TEST_CASE("a psd rank-one certificate shifts the verified maximum") {
  // Q_t = u u^T with small rational u keeps verification exact end to end
  SdpCertificate cert;
  for (int t = 0; t < 2; ++t) {
    const int s = basis().flag_count(t);
    std::vector<Rat> u(s);
    for (int i = 0; i < s; ++i) u[i] = Rat((i % 3) - 1, 20);
    Mat q = zero_mat(s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) q[i][j] = u[i] * u[j];
    cert.blocks.emplace_back(basis().type_codes[t], q);
  }
  Verdict loose = verify_certificate(basis(), cert, Rat(100));
  CHECK(loose.kind == Verdict::ProvesBound);
  Rat m = loose.max_lhs;
  Verdict at = verify_certificate(basis(), cert, m);
  CHECK(at.kind == Verdict::ProvesBound);
  CHECK(at.max_lhs == m);
  CHECK(at.tight_classes.size() >= 1);
  Verdict below =
      verify_certificate(basis(), cert, m - Rat(1, 1000000000));
  CHECK(below.kind == Verdict::FailsAtClass);
}

TEST_CASE("certificate directory loading") {
  namespace fs = std::filesystem;
  fs::path dir = fs::path("indpath_test_certs");
  fs::remove_all(dir);
  fs::create_directory(dir);
  write_file(dir / "a_block0.txt",
             "# comment\ntype 2:0\nsize 2\n1/2 0\n0 1/3\n");
  write_file(dir / "b_block1.txt", "type 2:1\nsize 1\n7/5\n");
  SdpCertificate cert = load_certificate_dir(dir.string());
  REQUIRE(cert.blocks.size() == 2);
  CHECK(cert.blocks[0].first == "2:0");
  CHECK(cert.blocks[0].second[0][0] == Rat(1, 2));
  CHECK(cert.blocks[0].second[1][1] == Rat(1, 3));
  CHECK(cert.blocks[1].first == "2:1");
  CHECK(cert.blocks[1].second[0][0] == Rat(7, 5));
  // undersized blocks surface as shape mismatches at verification time
  CHECK(throws_errc([&] { verify_certificate(basis(), cert, Rat(1)); },
                    Errc::ShapeMismatch));

  write_file(dir / "c_bad.txt", "type 2:0\nsize 2\n1 2\n3 4\n");
  CHECK(throws_errc([&] { load_certificate_dir(dir.string()); },
                    Errc::ShapeMismatch));  // asymmetric block
  fs::remove(dir / "c_bad.txt");

  write_file(dir / "c_short.txt", "type 2:0\nsize 2\n1 2\n");
  CHECK(throws_errc([&] { load_certificate_dir(dir.string()); },
                    Errc::ParseError));
  fs::remove(dir / "c_short.txt");

  write_file(dir / "c_dup.txt", "type 2:0\nsize 1\n0\n");
  CHECK(throws_errc([&] { load_certificate_dir(dir.string()); },
                    Errc::ShapeMismatch));  // duplicate type
  fs::remove_all(dir);

  CHECK(throws_errc([] { load_certificate_dir("no_such_dir_xyz"); },
                    Errc::IoError));
}

}  // TEST_SUITE
