// test_search.cpp
// Exhaustive maximization, the clone-delete move and its exact count
// identity, steepest-ascent local search, and vertex participation.

#include "doctest.h"

#include <random>

#include "indpath/canonical.hpp"
#include "indpath/constructions.hpp"
#include "indpath/counting.hpp"
#include "indpath/graph.hpp"
#include "indpath/search.hpp"

#include "test_util.hpp"

using namespace indpath;
using testutil::throws_errc;

TEST_SUITE("search") {

TEST_CASE("four-vertex T3-free maximum is the path itself") {
  SearchReport r = exhaustive_max(4, Family::T3Free, directed_path(4));
  CHECK(r.max_count == 1);
  CHECK(r.maximizers.size() == 1);
  CHECK(r.exhaustive);
  CHECK(r.labeled_examined == 317);
  CHECK(are_isomorphic(r.maximizers[0], directed_path(4)));
}

TEST_CASE("five-vertex T3-free maximum is the directed 5-cycle") {
  for (SearchBackend backend : {SearchBackend::Sweep, SearchBackend::Orderly}) {
    SearchReport r =
        exhaustive_max(5, Family::T3Free, directed_path(4), backend);
    CHECK(r.max_count == 5);
    CHECK(r.maximizers.size() == 1);
    CHECK(r.maximizer_codes.size() == 1);
    CHECK(are_isomorphic(r.maximizers[0], directed_cycle(5)));
    CHECK(r.exhaustive);
    CHECK(r.labeled_examined == 9735);
  }
}

TEST_CASE("maximizer reports are consistent") {
  SearchReport r = exhaustive_max(5, Family::AllOriented, directed_path(4));
  CHECK(r.exhaustive);
  CHECK(r.maximizers.size() == r.maximizer_codes.size());
  for (size_t i = 0; i < r.maximizers.size(); ++i) {
    CHECK(count_induced(r.maximizers[i], directed_path(4)) == r.max_count);
    CHECK(format_graph_compact(r.maximizers[i]) == r.maximizer_codes[i]);
    if (i) CHECK(r.maximizer_codes[i - 1] < r.maximizer_codes[i]);
  }
  // unconstrained 5-vertex graphs can't beat the best T3-free one here
  CHECK(r.max_count >= 5);
}

TEST_CASE("search backend limits") {
  CHECK(throws_errc(
      [] { exhaustive_max(7, Family::T3Free, directed_path(4), SearchBackend::Sweep); },
      Errc::Unsupported));
  CHECK(throws_errc(
      [] { exhaustive_max(8, Family::T3Free, directed_path(4), SearchBackend::Orderly); },
      Errc::Unsupported));
  CHECK(throws_errc([] { exhaustive_max(3, Family::T3Free, directed_path(4)); },
                    Errc::SizeMismatch));
}

TEST_CASE("clone_delete basics") {
  OrientedGraph c5 = directed_cycle(5);
  OrientedGraph g = clone_delete(c5, 0, 2);
  CHECK(g.n == 5);
  // vertex 2 removed (higher labels shift down), clone of 0 appended last:
  // the clone is non-adjacent to its source and copies its neighborhood
  CHECK(g.state(0, 4) == 0);
  CHECK(g.has_arc(4, 1));   // copies 0 -> 1
  CHECK(g.has_arc(3, 4));   // copies old 4 -> 0
  CHECK(throws_errc([&] { clone_delete(c5, 1, 1); }, Errc::OutOfRange));
  CHECK(throws_errc([&] { clone_delete(c5, 0, 5); }, Errc::OutOfRange));
  CHECK(throws_errc([&] { clone_delete(c5, -1, 2); }, Errc::OutOfRange));
}

TEST_CASE("clone of a cycle vertex forms the doubled class") {
  // cloning any vertex of C5 (deleting another) yields blow-up shapes
  OrientedGraph c5 = directed_cycle(5);
  OrientedGraph g = clone_delete(c5, 0, 1);
  CHECK(g.n == 5);
  CHECK(count_p4(g) == count_p4(blow_up({directed_path(4), {2, 1, 1, 1}})));
}

TEST_CASE("clone-delete count identity on random hosts") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    OrientedGraph g = testutil::random_t3_free(8, rng);
    int x = (int)(rng() % 8);
    int y = (int)(rng() % 8);
    if (x == y) y = (x + 1) % 8;
    OrientedGraph h = clone_delete(g, x, y);
    Int delta = count_p4_through(g, VertexSet({x})) -
                count_p4_through(g, VertexSet({y})) -
                count_p4_through(g, VertexSet({x, y}));
    CHECK(count_p4(h) - count_p4(g) == delta);
  }
}

TEST_CASE("local search fixed points and improvements") {
  OrientedGraph start = blow_up({directed_cycle(5), {2, 2, 2, 2, 2}});
  SearchReport fixed =
      local_search(start, Family::T3Free, MoveSet{true, false});
  CHECK(fixed.max_count == 80);
  CHECK_FALSE(fixed.exhaustive);
  CHECK(fixed.maximizers.size() == 1);
  CHECK(fixed.maximizers[0].n == 10);

  SearchReport full = local_search(start, Family::T3Free, MoveSet{true, true});
  CHECK(full.max_count >= 80);
  CHECK(is_t3_free(full.maximizers[0]));
  CHECK(count_p4(full.maximizers[0]) == full.max_count);
}

TEST_CASE("local search climbs from an unbalanced blow-up") {
  OrientedGraph start = blow_up({directed_cycle(5), {3, 3, 2, 1, 1}});
  SearchReport r = local_search(start, Family::T3Free, MoveSet{true, false});
  CHECK(r.max_count == 80);
  // too large for canonical comparison; the 5-subgraph histogram separates it
  OrientedGraph balanced = blow_up({directed_cycle(5), {2, 2, 2, 2, 2}});
  CHECK(induced_profile(r.maximizers[0], 5) == induced_profile(balanced, 5));
}

TEST_CASE("local search edge cases") {
  OrientedGraph edgeless(6);
  SearchReport r = local_search(edgeless, Family::T3Free, MoveSet{true, true});
  CHECK(r.max_count == 0);

  OrientedGraph tt3 = transitive_tournament(3);
  CHECK(throws_errc([&] { local_search(tt3, Family::T3Free, MoveSet{}); },
                    Errc::InvalidStart));

  OrientedGraph start = blow_up({directed_cycle(5), {3, 3, 2, 1, 1}});
  SearchReport capped =
      local_search(start, Family::T3Free, MoveSet{true, true}, 1);
  CHECK(capped.max_count == count_p4(start));
  CHECK(capped.labeled_examined <= 1);
}

TEST_CASE("vertex_min_participation") {
  OrientedGraph c5 = directed_cycle(5);
  auto [v0, c0] = vertex_min_participation(c5);
  CHECK(v0 == 0);  // all tie at 4, lowest index wins
  CHECK(c0 == 4);

  OrientedGraph big = blow_up({c5, {2, 2, 2, 2, 2}});
  auto [v1, c1] = vertex_min_participation(big);
  CHECK(v1 == 0);
  CHECK(c1 == 32);

  // a vertex outside every copy has participation 0
  OrientedGraph p4 = directed_path(4);
  OrientedGraph padded = make_graph(5, {{0, 1}, {1, 2}, {2, 3}});
  auto [v2, c2] = vertex_min_participation(padded);
  CHECK(v2 == 4);
  CHECK(c2 == 0);
  CHECK(count_p4_through(padded, VertexSet({0})) == 1);
  CHECK(p4.n == 4);

  CHECK(throws_errc([] { vertex_min_participation(OrientedGraph(3)); },
                    Errc::SizeMismatch));
}

}  // TEST_SUITE
