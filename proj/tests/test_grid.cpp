// test_grid.cpp
// Grid kernels: case parsing, problem assembly, exact point evaluation,
// sampled maxima, certified bounds, slack series, and soundness sampling.

#include "doctest.h"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "indpath/grid.hpp"
#include "indpath/numbers.hpp"

#include "test_util.hpp"

using namespace indpath;
using testutil::throws_errc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, Rat> point_of(const GridCertificate& cert) {
  std::map<std::string, Rat> values;
  for (int a = 0; a < cert.d; ++a) values[cert.free_names[a]] = cert.argmax[a];
  return values;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("builtin case table matches the data file") {
  CHECK(builtin_cases_text() == slurp(std::string(INDPATH_DATA_DIR) + "/grid_cases.txt"));
}

TEST_CASE("case parsing round trip") {
  std::vector<CaseDef> parsed = parse_cases(builtin_cases_text());
  const std::vector<CaseDef>& builtin = builtin_cases();
  REQUIRE(parsed.size() == 4);
  REQUIRE(builtin.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(parsed[i].id == builtin[i].id);
    CHECK(parsed[i].free_vars == builtin[i].free_vars);
    CHECK(parsed[i].zero_vars == builtin[i].zero_vars);
  }
  CHECK(builtin[0].free_vars ==
        std::vector<std::string>{"o1", "i2", "i4", "o4"});
  CHECK(builtin[1].free_vars ==
        std::vector<std::string>{"o1", "i1", "i3", "o3"});
}

TEST_CASE("case parsing rejects malformed text") {
  CHECK(throws_errc([] { parse_cases("nonsense line\n"); }, Errc::ParseError));
  CHECK(throws_errc([] { parse_cases("free: o1\n"); }, Errc::ParseError));
  CHECK(throws_errc([] { parse_cases("case 1\nfree: o1\n"); }, Errc::InvalidSpec));
  CHECK(throws_errc(
      [] { parse_cases("case 1\nfree: o1 x9\nzero: i1\n"); }, Errc::InvalidSpec));
  CHECK(throws_errc(
      [] {
        parse_cases("case 1\nfree: o1 i2\nzero: i1 o2 i3 o3 i5 o5\n");
      },
      Errc::InvalidSpec));  // i4, o4 missing
  CHECK(throws_errc(
      [] {
        std::string one =
            "case 1\nfree: o1 i2 i4 o4\nzero: i1 o2 i3 o3 i5 o5\n";
        parse_cases(one + one);
      },
      Errc::InvalidSpec));  // duplicate id
  CHECK(throws_errc([] { parse_cases("# only a comment\n"); }, Errc::ParseError));
}

TEST_CASE("problem shapes") {
  GridProblem std_p = standard_problem();
  CHECK(std_p.vars.size() == 15);
  CHECK(std_p.free_indices().size() == 10);
  CHECK(std_p.objective.size() == 20);
  CHECK(std_p.constraints.size() == 10);
  CHECK(std_p.box == Rat(21, 100));
  CHECK(std_p.label == "standard");
  for (const auto& mono : std_p.objective) CHECK(mono.factors.size() == 3);

  GridProblem c1 = restricted_case(1);
  CHECK(c1.vars.size() == 15);
  CHECK(c1.label == "case 1");
  std::vector<int> free = c1.free_indices();
  REQUIRE(free.size() == 4);
  CHECK(free == std::vector<int>{0, 1, 2, 3});
  CHECK(c1.vars[0].name() == "o1");
  CHECK(c1.vars[1].name() == "i2");
  CHECK(c1.vars[2].name() == "i4");
  CHECK(c1.vars[3].name() == "o4");
  for (int j = 1; j <= 5; ++j) CHECK(c1.vars[9 + j].name() == "n" + std::to_string(j));

  CHECK(throws_errc([] { restricted_case(9); }, Errc::UnknownCase));
}

TEST_CASE("exact point evaluation on the standard problem") {
  GridProblem p = standard_problem();
  std::map<std::string, Rat> uniform;
  for (int v : p.free_indices()) uniform[p.vars[v].name()] = Rat(7, 100);
  PointEval ev = evaluate_point(p, uniform);
  CHECK(ev.feasible);
  CHECK(ev.objective == Rat(343, 50000));
  CHECK(ev.violated.empty());

  // over the box: infeasible with a recorded violation
  uniform["i1"] = Rat(22, 100);
  PointEval bad = evaluate_point(p, uniform);
  CHECK_FALSE(bad.feasible);
  CHECK(!bad.violated.empty());
}

TEST_CASE("all-zero free variables are feasible with zero objective") {
  for (int id = 1; id <= 4; ++id) {
    GridProblem p = restricted_case(id);
    std::map<std::string, Rat> zeros;
    for (int v : p.free_indices()) zeros[p.vars[v].name()] = Rat(0);
    PointEval ev = evaluate_point(p, zeros);
    CHECK(ev.feasible);
    CHECK(ev.objective == 0);
  }
}

TEST_CASE("point evaluation validates its input") {
  GridProblem p = restricted_case(1);
  CHECK(throws_errc([&] { evaluate_point(p, {}); }, Errc::InvalidSpec));
  CHECK(throws_errc(
      [&] {
        evaluate_point(p, {{"o1", Rat(0)}, {"i2", Rat(0)}, {"i4", Rat(0)},
                           {"o4", Rat(0)}, {"i1", Rat(0)}});
      },
      Errc::InvalidSpec));  // i1 is pinned, not free
  CHECK(throws_errc(
      [&] {
        evaluate_point(p, {{"o1", Rat(0)}, {"i2", Rat(0)}, {"i4", Rat(0)},
                           {"q7", Rat(0)}});
      },
      Errc::InvalidSpec));
}

TEST_CASE("one-variable toy grid hits the box endpoint") {
  GridProblem p;
  p.vars.push_back({VarKind::I, 1, VarRole::Free});
  p.objective.push_back({{0}});
  p.label = "toy";
  GridCertificate cert = grid_search(p, 2, 0);
  CHECK(cert.d == 1);
  CHECK(cert.feasible_points == 3);
  CHECK(cert.argmax_units == std::vector<int>{2});
  CHECK(cert.sampled == Rat(21, 100));

  GridCertificate bound = certify(p, 2, 0);
  CHECK(bound.has_bound);
  CHECK(bound.lipschitz == Rat(63, 25));
  CHECK(bound.certified == Rat(21, 100) + Rat(63, 25) * Rat(21, 200));
}

TEST_CASE("resolution 10 certificates match pinned values") {
  struct Expect {
    int id;
    std::vector<int> argmax;
    std::uint64_t feasible;
    Rat sampled;
    Rat certified;
  };
  const std::vector<Expect> table = {
      {1, {8, 2, 7, 4}, 8368, Rat(1120581, 62500000), Rat(14350581, 62500000)},
      {2, {4, 7, 0, 6}, 5257, Rat(435267, 25000000), Rat(5727267, 25000000)},
      {3, {4, 7, 8, 2}, 8368, Rat(1120581, 62500000), Rat(14350581, 62500000)},
      {4, {6, 0, 7, 4}, 5257, Rat(435267, 25000000), Rat(5727267, 25000000)},
  };
  for (const auto& e : table) {
    GridCertificate cert = certify(restricted_case(e.id), 10);
    CHECK(cert.argmax_units == e.argmax);
    CHECK(cert.feasible_points == e.feasible);
    CHECK(cert.sampled == e.sampled);
    CHECK(cert.lipschitz == Rat(63, 25));
    CHECK(cert.certified == e.certified);
    CHECK(cert.slack_value == Rat(21, 1000));
    // the sampled value is the true objective at the reported argmax
    PointEval ev = evaluate_point(restricted_case(e.id), point_of(cert));
    CHECK(ev.objective == cert.sampled);
  }
}

TEST_CASE("resolution 20 certificates match pinned values") {
  struct Expect {
    int id;
    std::vector<int> argmax;
    std::uint64_t feasible;
    Rat sampled;
    Rat certified;
  };
  const std::vector<Expect> table = {
      {1, {15, 4, 14, 7}, 101579, Rat(861273, 50000000), Rat(6153273, 50000000)},
      {2, {8, 13, 0, 12}, 57660, Rat(83349, 5000000), Rat(612549, 5000000)},
      {3, {7, 14, 15, 4}, 101579, Rat(861273, 50000000), Rat(6153273, 50000000)},
      {4, {12, 0, 13, 8}, 57660, Rat(83349, 5000000), Rat(612549, 5000000)},
  };
  for (const auto& e : table) {
    GridCertificate cert = certify(restricted_case(e.id), 20);
    CHECK(cert.argmax_units == e.argmax);
    CHECK(cert.feasible_points == e.feasible);
    CHECK(cert.sampled == e.sampled);
    CHECK(cert.certified == e.certified);
    CHECK(cert.certified < Rat(19, 100));
  }
}

TEST_CASE("fixed absolute slack series is monotone") {
  // (R, S) with S/R fixed keeps the slack-relaxed region constant while the
  // grid refines, so sampled maxima can only grow
  const std::vector<std::pair<int, int>> series = {{10, 1}, {20, 2}, {40, 4}};
  const std::vector<Rat> case1 = {Rat(1120581, 62500000),
                                  Rat(9233217, 500000000),
                                  Rat(18735003, 1000000000)};
  const std::vector<Rat> case2 = {Rat(435267, 25000000),
                                  Rat(3602529, 200000000),
                                  Rat(7325451, 400000000)};
  for (int i = 0; i < 3; ++i) {
    GridCertificate a =
        grid_search(restricted_case(1), series[i].first, series[i].second);
    GridCertificate b =
        grid_search(restricted_case(2), series[i].first, series[i].second);
    CHECK(a.slack_value == Rat(21, 1000));
    CHECK(b.slack_value == Rat(21, 1000));
    CHECK(a.sampled == case1[i]);
    CHECK(b.sampled == case2[i]);
    if (i) {
      CHECK(case1[i] > case1[i - 1]);
      CHECK(case2[i] > case2[i - 1]);
    }
  }
}

TEST_CASE("worker count does not change certificates") {
  GridCertificate a = grid_search(restricted_case(1), 10, 1, 1);
  GridCertificate b = grid_search(restricted_case(1), 10, 1, 3);
  a.has_bound = b.has_bound = false;
  CHECK(format_certificate(a) == format_certificate(b));
}

TEST_CASE("certification options") {
  GridProblem c1 = restricted_case(1);
  CHECK(symbolic_partial_bound(standard_problem()) == Rat(1323, 5000));
  for (int id = 1; id <= 4; ++id)
    CHECK(symbolic_partial_bound(restricted_case(id)) == Rat(1323, 5000));

  GridCertificate tight = certify(c1, 10, 1, std::nullopt, true);
  CHECK(tight.lipschitz == Rat(1323, 5000));
  CHECK(tight.certified ==
        tight.sampled + Rat(4) * Rat(1323, 5000) * Rat(21, 1000));
  GridCertificate loose = certify(c1, 10);
  CHECK(tight.certified < loose.certified);
  CHECK(tight.sampled == loose.sampled);

  GridCertificate custom = certify(c1, 10, 1, Rat(3));
  CHECK(custom.lipschitz == Rat(3));
  CHECK(throws_errc([&] { certify(c1, 10, 1, Rat(1, 4)); }, Errc::InvalidSpec));
}

TEST_CASE("search validation and limits") {
  GridProblem c1 = restricted_case(1);
  CHECK(throws_errc([&] { grid_search(c1, 1); }, Errc::InvalidSpec));
  CHECK(throws_errc([&] { grid_search(c1, 10, -1); }, Errc::InvalidSpec));
  CHECK(throws_errc([&] { grid_search(c1, 10, 1, 0, 1000); },
                    Errc::ResourceLimit));
  CHECK(throws_errc([] { grid_search(standard_problem(), 4); },
                    Errc::Unsupported));
}

TEST_CASE("huge slack frees the whole grid") {
  GridCertificate cert = grid_search(restricted_case(1), 10, 1000);
  CHECK(cert.feasible_points == 14641);  // 11^4
  CHECK(cert.sampled >= Rat(1120581, 62500000));
}

TEST_CASE("random feasible points never beat the certified bound") {
  std::mt19937_64 rng(997);
  for (int id = 1; id <= 4; ++id) {
    GridProblem p = restricted_case(id);
    GridCertificate cert = certify(p, 10);
    std::vector<std::string> names;
    for (int v : p.free_indices()) names.push_back(p.vars[v].name());
    int feasible_seen = 0;
    for (int trial = 0; trial < 4000; ++trial) {
      std::map<std::string, Rat> values;
      for (const auto& nm : names)
        values[nm] = Rat(21 * (int)(rng() % 998), 100 * 997);
      PointEval ev = evaluate_point(p, values);
      if (!ev.feasible) continue;
      ++feasible_seen;
      CHECK(ev.objective <= cert.certified);
    }
    CHECK(feasible_seen > 0);
  }
}

TEST_CASE("certificate formatting is exact") {
  GridCertificate cert = certify(restricted_case(1), 10);
  CHECK(format_certificate(cert) ==
        "label: case 1\n"
        "resolution: 10\n"
        "slack-steps: 1\n"
        "slack: 21/1000\n"
        "free: o1 i2 i4 o4\n"
        "argmax-units: 8 2 7 4\n"
        "argmax: 21/125 21/500 147/1000 21/250\n"
        "sampled: 1120581/62500000\n"
        "feasible-points: 8368\n"
        "lipschitz: 63/25\n"
        "certified: 14350581/62500000\n");
  GridCertificate plain = grid_search(restricted_case(2), 10);
  std::string two = format_certificates({cert, plain});
  CHECK(two.find("\n\nlabel: case 2\n") != std::string::npos);
}

}  // TEST_SUITE
