#include <doctest.h>

#include "lpalab/invariants.hpp"
#include "lpalab/moves.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using lpa::MultiGraph;
using lpa::OrbitConfig;
using lpa::ShiftSpec;
using lpatest::sig;

TEST_CASE("shift: single-move examples") {
  SUBCASE("comet family: edges become (l2-1)+t1") {
    MultiGraph g({{2, 1}, {0, 3}});  // t1=1 edges u->v, l2=3 loops at v
    MultiGraph h = lpa::shift(g, {0, 1});
    CHECK(h == MultiGraph({{2, 3}, {0, 3}}));
  }
  SUBCASE("collapsing a 2-cycle edge into loops") {
    MultiGraph g({{0, 2}, {1, 0}});  // t1=2, t2=1
    MultiGraph h = lpa::shift(g, {1, 0});
    CHECK(h == MultiGraph({{0, 2}, {0, 2}}));  // t1*t2 = 2 loops at v
  }
  SUBCASE("errors") {
    MultiGraph g({{1, 1}, {0, 0}});
    CHECK_THROWS_AS(lpa::shift(g, {0, 0}), lpa::Error);  // loop shift
    CHECK_THROWS_AS(lpa::shift(g, {1, 0}), lpa::Error);  // no such edge
    CHECK_THROWS_AS(lpa::shift(g, {0, 1}), lpa::Error);  // range is a sink
  }
}

TEST_CASE("shift replays: the three table reductions, edge-count exact") {
  SUBCASE("one extra move lands the diagonal family in the comet family") {
    for (int64_t t1 = 1; t1 <= 5; ++t1)
      for (int64_t l2 = 2; l2 <= 5; ++l2) {
        MultiGraph e({{t1 + 1, t1}, {0, l2}});
        MultiGraph f = lpa::shift(e, {0, 1});
        CHECK(f == MultiGraph({{t1 + 1, (l2 - 1) + t1}, {0, l2}}));
      }
  }
  SUBCASE("pure 2-cycle becomes a comet with t1*t2 loops") {
    for (int64_t t1 = 1; t1 <= 5; ++t1)
      for (int64_t t2 = 1; t2 <= t1; ++t2) {
        if (t1 * t2 < 2) continue;
        MultiGraph g({{0, t1}, {t2, 0}});
        for (int64_t k = 0; k < t2; ++k) g = lpa::shift(g, {1, 0});
        CHECK(g == MultiGraph({{0, t1}, {0, t1 * t2}}));
      }
  }
  SUBCASE("2-cycle with loops becomes a comet with l2 + t1*t2 loops") {
    for (int64_t t1 = 1; t1 <= 5; ++t1)
      for (int64_t t2 = 1; t2 <= 5; ++t2)
        for (int64_t l2 = 1; l2 <= 5; ++l2) {
          if (l2 - t2 == 1) continue;
          MultiGraph g({{0, t1}, {t2, l2}});
          for (int64_t k = 0; k < t2; ++k) g = lpa::shift(g, {1, 0});
          CHECK(g == MultiGraph({{0, t1}, {0, l2 + t1 * t2}}));
        }
  }
}

namespace {

std::optional<ShiftSpec> random_valid_shift(std::mt19937_64& gen, const MultiGraph& g) {
  std::vector<ShiftSpec> valid;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v)
      if (u != v && g.adjacency(u, v) >= 1 && !g.is_sink(v)) valid.push_back({u, v});
  if (valid.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
  return valid[pick(gen)];
}

}  // namespace

TEST_CASE("shift preserves every classification invariant") {
  auto gen = lpatest::rng();
  int done = 0;
  while (done < 500) {
    MultiGraph g = lpatest::random_graph(gen, 4, 5);
    auto spec = random_valid_shift(gen, g);
    if (!spec) continue;
    ++done;
    MultiGraph h = lpa::shift(g, *spec);

    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.total_multiplicity() - g.total_multiplicity() == g.out_degree(spec->range) - 1);

    auto kg = lpa::k0_with_unit(g), kh = lpa::k0_with_unit(h);
    CHECK(kg.d_e == kh.d_e);
    CHECK(kg.delta_e == kh.delta_e);
    CHECK(kg.group == kh.group);
    CHECK(kg.unit_order == kh.unit_order);
    CHECK(lpa::ibn_and_type(g) == lpa::ibn_and_type(h));
    auto fg = lpa::graph_flags(g), fh = lpa::graph_flags(h);
    CHECK(fg.decomposable == fh.decomposable);
    CHECK(fg.simple == fh.simple);
    CHECK(fg.pis == fh.pis);
  }
}

TEST_CASE("orbit search") {
  OrbitConfig cfg;
  SUBCASE("one step away") {
    MultiGraph e({{2, 1}, {0, 3}});
    MultiGraph f = lpa::shift(e, {0, 1});
    auto w = lpa::orbit_search(e, f, cfg);
    REQUIRE(w.has_value());
    CHECK(w->steps.size() == 1);
    CHECK(lpa::replay_witness(*w));
  }
  SUBCASE("the two overlapping torsion presentations meet within depth 4") {
    OrbitConfig tight{24, 4, 50000};
    auto w = lpa::orbit_search(sig(2, 2, 1, 1), sig(3, 2, 1, 1), tight);
    REQUIRE(w.has_value());
    CHECK(lpa::replay_witness(*w));
  }
  SUBCASE("different types can never meet") {
    auto w = lpa::orbit_search(sig(0, 0, 2, 1), sig(0, 0, 3, 2), cfg);
    CHECK(!w.has_value());
  }
  SUBCASE("deterministic under a fixed configuration") {
    auto a = lpa::orbit_search(sig(2, 2, 1, 1), sig(3, 2, 1, 1), cfg);
    auto b = lpa::orbit_search(sig(2, 2, 1, 1), sig(3, 2, 1, 1), cfg);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->meet == b->meet);
    CHECK(a->steps.size() == b->steps.size());
    for (std::size_t i = 0; i < a->steps.size(); ++i) {
      CHECK(a->steps[i].from_left == b->steps[i].from_left);
      CHECK(a->steps[i].spec == b->steps[i].spec);
    }
  }
  SUBCASE("identical inputs meet with an empty path") {
    auto w = lpa::orbit_search(sig(3, 0, 0, 2), sig(3, 0, 0, 2), cfg);
    REQUIRE(w.has_value());
    CHECK(w->steps.empty());
    CHECK(lpa::replay_witness(*w));
  }
  SUBCASE("canonical forms bound the state space to 8 vertices") {
    MultiGraph nine(std::vector<std::vector<int64_t>>(9, std::vector<int64_t>(9, 0)));
    CHECK_THROWS_AS(lpa::orbit_search(nine, nine, cfg), lpa::Error);
  }
}

TEST_CASE("determinant of n_prime is invariant under shifts") {
  auto gen = lpatest::rng();
  int done = 0;
  while (done < 500) {
    MultiGraph g = lpatest::random_graph(gen, 4, 4);
    auto spec = random_valid_shift(gen, g);
    if (!spec) continue;
    ++done;
    CHECK(lpa::determinant(lpa::n_prime(g)) == lpa::determinant(lpa::n_prime(lpa::shift(g, *spec))));
  }
}
