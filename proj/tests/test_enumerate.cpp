// test_enumerate.cpp
// Enumeration: class counts, backend agreement, orbit reconciliation of
// labeled totals, sweep order and range splitting.

#include "doctest.h"

#include <set>

#include "indpath/enumerate.hpp"
#include "indpath/graph.hpp"
#include "indpath/numbers.hpp"

#include "test_util.hpp"

using namespace indpath;
using testutil::throws_errc;

TEST_SUITE("enumerate") {

TEST_CASE("class counts up to n=5") {
  const int all[6] = {1, 1, 2, 7, 42, 582};
  const int t3f[6] = {1, 1, 2, 6, 22, 122};
  for (int n = 0; n <= 5; ++n) {
    CHECK(enumerate_family(n, Family::AllOriented).size() == all[n]);
    CHECK(enumerate_family(n, Family::T3Free).size() == t3f[n]);
  }
}

TEST_CASE("backends produce identical families") {
  for (int n = 0; n <= 5; ++n)
    for (Family fam : {Family::AllOriented, Family::T3Free}) {
      GraphFamily a = enumerate_family(n, fam, EnumBackend::Sweep);
      GraphFamily b = enumerate_family(n, fam, EnumBackend::Orderly);
      CHECK(a.codes == b.codes);
      CHECK(a.aut_orders == b.aut_orders);
      for (int i = 0; i < a.size(); ++i) CHECK(a.members[i] == b.members[i]);
    }
}

TEST_CASE("family members are canonical, sorted and constraint-abiding") {
  GraphFamily f = enumerate_family(5, Family::T3Free);
  for (int i = 0; i < f.size(); ++i) {
    CHECK(format_graph_compact(f.members[i]) == f.codes[i]);
    CHECK(is_t3_free(f.members[i]));
    if (i) CHECK(f.codes[i - 1] < f.codes[i]);
  }
}

TEST_CASE("orbit counting reconciles labeled totals") {
  const std::uint64_t t3f_labeled[7] = {1, 1, 3, 21, 317, 9735, 583907};
  for (int n = 0; n <= 5; ++n) {
    for (Family fam : {Family::AllOriented, Family::T3Free}) {
      GraphFamily f = enumerate_family(n, fam);
      CHECK(f.labeled_total() == Int(labeled_count(n, fam)));
    }
    CHECK(labeled_count(n, Family::T3Free) == t3f_labeled[n]);
    CHECK(labeled_count(n, Family::AllOriented) == ipow(3, pair_count(n)));
  }
}

TEST_CASE("n=6 T3-free classes via the orderly backend") {
  GraphFamily f = enumerate_family(6, Family::T3Free, EnumBackend::Orderly);
  CHECK(f.size() == 1107);
  CHECK(f.labeled_total() == 583907);
  CHECK(f.labeled_total() == Int(labeled_count(6, Family::T3Free)));
}

TEST_CASE("sweep visits every labeled graph in counter order") {
  std::uint64_t visits = 0;
  bool first_is_empty = false;
  labeled_sweep(3, Family::AllOriented, [&](const OrientedGraph& g) {
    if (visits == 0) first_is_empty = (g.arc_count() == 0);
    ++visits;
  });
  CHECK(visits == 27);
  CHECK(first_is_empty);

  std::uint64_t t3f_visits = 0;
  labeled_sweep(4, Family::T3Free, [&](const OrientedGraph& g) {
    CHECK(is_t3_free(g));
    ++t3f_visits;
  });
  CHECK(t3f_visits == 317);
}

TEST_CASE("range splitting covers the sweep exactly") {
  std::set<std::string> whole, split;
  auto collect = [&](std::set<std::string>& into) {
    return [&into](const OrientedGraph& g) {
      into.insert(format_graph_compact(g));
    };
  };
  std::uint64_t total =
      labeled_sweep_range(4, Family::T3Free, 0, 729, collect(whole));
  std::uint64_t a = labeled_sweep_range(4, Family::T3Free, 0, 100, collect(split));
  std::uint64_t b = labeled_sweep_range(4, Family::T3Free, 100, 729, collect(split));
  CHECK(total == 317);
  CHECK(a + b == total);
  CHECK(whole == split);
  CHECK(throws_errc([&] {
          labeled_sweep_range(4, Family::T3Free, 0, 730, [](const OrientedGraph&) {});
        },
        Errc::OutOfRange));
}

TEST_CASE("worker count does not change results") {
  GraphFamily a = enumerate_family(5, Family::T3Free, EnumBackend::Orderly, 1);
  GraphFamily b = enumerate_family(5, Family::T3Free, EnumBackend::Orderly, 3);
  CHECK(a.codes == b.codes);
  CHECK(labeled_count(5, Family::T3Free, 1) == labeled_count(5, Family::T3Free, 4));
}

TEST_CASE("size limits") {
  CHECK(throws_errc([] { enumerate_family(7, Family::T3Free, EnumBackend::Sweep); },
                    Errc::Unsupported));
  CHECK(throws_errc([] { labeled_count(7, Family::T3Free); }, Errc::Unsupported));
  CHECK(throws_errc([] { enumerate_family(8, Family::T3Free, EnumBackend::Orderly); },
                    Errc::Unsupported));
  CHECK(throws_errc([] { enumerate_family(-1, Family::T3Free); }, Errc::OutOfRange));
}

TEST_CASE("family names") {
  CHECK(std::string(family_name(Family::AllOriented)) == "all-oriented");
  CHECK(std::string(family_name(Family::T3Free)) == "t3-free");
}

}  // TEST_SUITE
