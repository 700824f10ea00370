#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "uncross/medial.hpp"
#include "uncross/poset.hpp"

using namespace uncross;

namespace {

Matching M(std::vector<int> p) { return Matching(std::move(p)); }

// A single strand from stub 1 to stub 2 with a kink: one crossing carrying an
// empty monogon.
MedialGraph kink_fixture() {
  // vertices: 0 = stub 1, 1 = stub 2, 2 = the crossing
  // half-edges: 0 stub1 ray, 1 its end at v; 2-3 the loop; 4 toward stub2, 5 stub2 ray
  return MedialGraph::from_arrays(
      1,
      /*twin*/ {1, 0, 3, 2, 5, 4},
      /*next*/ {0, 2, 3, 4, 1, 5},
      /*vertex*/ {0, 2, 2, 2, 2, 1},
      /*stubs*/ {0, 1});
}

// Two strands (1 -> 2 below, 4 -> 3 above) crossing twice around an empty
// bigon; the canonical lens-removal site.
MedialGraph bigon_fixture() {
  // vertices: stubs 0-3 (labels 1..4), u = 4 (left crossing), w = 5 (right)
  // half-edges: 0 stub1, 1 u.toStub1; 2 u.upper, 3 w.upper; 4 u.lower,
  //             5 w.lower; 6 u.toStub4, 7 stub4; 8 w.toStub2, 9 stub2;
  //             10 w.toStub3, 11 stub3
  return MedialGraph::from_arrays(
      2,
      /*twin*/ {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10},
      /*next*/ {0, 4, 6, 5, 2, 8, 1, 7, 10, 9, 3, 11},
      /*vertex*/ {0, 4, 4, 5, 4, 5, 4, 3, 5, 1, 5, 2},
      /*stubs*/ {0, 1, 2, 3});
}

// A lens between strands 1->3 and 8->4 whose interior is crossed by the
// transversal strand 6->2; a fourth strand 5->7 crosses the transversal on
// its way around. Needs a Yang-Baxter step before any lens can collapse.
MedialGraph lens_with_transversal_fixture() {
  // vertices: stubs 0-7 (labels 1..8), u=8, w=9 (lens corners),
  //           a=10 (transversal x upper side), b=11 (transversal x lower side),
  //           r=12 (transversal x top strand)
  // half-edge table, grouped by edge:
  //  0 stub1 / 1 u.to1       2 u.toA(up) / 3 a.toU      4 a.toW / 5 w.toA
  //  6 w.to3 / 7 stub3       8 stub8 / 9 u.to8         10 u.toB(low) / 11 b.toU
  // 12 b.toW / 13 w.toB     14 w.to4 / 15 stub4        16 stub6 / 17 r.to6
  // 18 r.toA / 19 a.toR     20 a.toB / 21 b.toA        22 b.to2 / 23 stub2
  // 24 stub5 / 25 r.to5     26 r.to7 / 27 stub7
  return MedialGraph::from_arrays(
      4,
      /*twin*/ {1, 0,  3, 2,  5, 4,  7, 6,  9, 8,  11, 10, 13, 12, 15, 14,
                17, 16, 19, 18, 21, 20, 23, 22, 25, 24, 27, 26},
      /*next*/ {0,  10, 9,  20, 19, 13, 14, 7,  8,  1,  2,  22, 21, 6,
                5,  15, 16, 26, 25, 3,  4,  11, 12, 23, 24, 17, 18, 27},
      /*vertex*/ {0, 8, 8, 10, 10, 9, 9, 2,  7, 8,  8, 11, 11, 9,
                  9, 3, 5, 12, 12, 10, 10, 11, 11, 1, 4, 12, 12, 6},
      /*stubs*/ {0, 1, 2, 3, 4, 5, 6, 7});
}

}  // namespace

TEST_SUITE_BEGIN("medial");

TEST_CASE("construction from matchings") {
  const MedialGraph g1 = MedialGraph::from_matching(M({2, 1, 4, 3}));
  CHECK(g1.crossings() == 0);
  CHECK(g1.strands().size() == 2);
  CHECK(MedialGraph::from_matching(top_matching(2)).crossings() == 1);
  // the ten-point example has exactly its interleaving count of crossings
  const Matching big = M({7, 9, 8, 10, 6, 5, 1, 3, 2, 4});
  CHECK(MedialGraph::from_matching(big).crossings() == 5);
  CHECK(MedialGraph::from_matching(M({2, 1})).is_lensless());
}

TEST_CASE("strand endpoints reproduce the matching") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_matchings(n)) {
      const MedialGraph g = MedialGraph::from_matching(m);
      g.validate();
      CHECK(g.is_lensless());
      CHECK(g.crossings() == crossing_number(m));
      std::vector<int> partner(2 * n, 0);
      for (const Strand& s : g.strands()) {
        REQUIRE_FALSE(s.closed);
        partner[s.end_a - 1] = s.end_b;
        partner[s.end_b - 1] = s.end_a;
      }
      CHECK(M(partner) == m);
    }
}

TEST_CASE("resolution of the single crossing at n=2") {
  const MedialGraph g = MedialGraph::from_matching(top_matching(2));
  const int q = g.internal_vertices()[0];
  CHECK(g.resolve_crossing(q, 0).to_matching() == M({2, 1, 4, 3}));
  CHECK(g.resolve_crossing(q, 1).to_matching() == M({4, 3, 2, 1}));
  CHECK_THROWS_AS(g.resolve_crossing(0, 0), std::invalid_argument);  // a stub
  CHECK_THROWS_AS(g.resolve_crossing(q, 2), std::invalid_argument);
}

TEST_CASE("resolving any crossings of any diagram keeps the map valid") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_matchings(n)) {
      const MedialGraph g = MedialGraph::from_matching(m);
      const auto verts = g.internal_vertices();
      const int k = static_cast<int>(verts.size());
      long long total = 1;
      for (int t = 0; t < k; ++t) total *= 3;
      for (long long code = 0; code < total; ++code) {
        long long x = code;
        std::vector<std::pair<int, int>> sites;
        for (int t = 0; t < k; ++t) {
          const int digit = static_cast<int>(x % 3);
          x /= 3;
          if (digit) sites.push_back({verts[t], digit - 1});
        }
        g.resolve_crossings(sites).validate();  // throws on any breakage
      }
    }
}

TEST_CASE("lens appears after one resolution of the n=3 top") {
  const MedialGraph g = MedialGraph::from_matching(top_matching(3));
  const int q12 = g.crossing_of(1, 2);
  REQUIRE(q12 >= 0);
  // resolve toward matching 1 with 2: that is the direction whose reduction
  // pairs 1 with 2
  MedialGraph h0 = g.resolve_crossing(q12, 0);
  MedialGraph h1 = g.resolve_crossing(q12, 1);
  const MedialGraph& lensy =
      h0.to_matching().partner(1) == 2 ? h0 : h1;
  CHECK_FALSE(lensy.is_lensless());
  const MedialGraph red = lensy.reduce();
  CHECK(red.is_lensless());
  CHECK(red.crossings() == 1);
  CHECK(red.to_matching() == M({2, 1, 5, 6, 3, 4}));  // {(1,2),(3,5),(4,6)}
}

TEST_CASE("kink fixture: loop removal") {
  const MedialGraph g = kink_fixture();
  CHECK(g.crossings() == 1);
  CHECK_FALSE(g.is_lensless());  // the strand crosses itself
  const auto strands = g.strands();
  REQUIRE(strands.size() == 1);
  CHECK_FALSE(strands[0].closed);
  const auto mv = g.find_move();
  REQUIRE(mv.has_value());
  CHECK(mv->kind == MoveKind::LoopRemoval);
  const MedialGraph h = g.apply_move(*mv);
  CHECK(h.crossings() == 0);
  CHECK(h.free_loops() == 0);
  CHECK(h.to_matching() == M({2, 1}));  // connectivity unchanged
  CHECK(g.reduce().is_lensless());
}

TEST_CASE("bigon fixture: lens removal re-pairs the strand ends") {
  const MedialGraph g = bigon_fixture();
  CHECK(g.crossings() == 2);
  CHECK_FALSE(g.is_lensless());
  const auto mv = g.find_move();
  REQUIRE(mv.has_value());
  CHECK(mv->kind == MoveKind::LensRemoval);
  const MedialGraph h = g.apply_move(*mv);
  CHECK(h.crossings() == 1);
  // endpoint sets {1,2} and {4,3} re-pair across the surviving crossing
  CHECK(h.to_matching() == M({3, 4, 1, 2}));
  CHECK(h.is_lensless());
}

TEST_CASE("closed loop from a double resolution is dropped") {
  // resolving both crossings of the bigon fixture one way spawns a free loop
  const MedialGraph g = bigon_fixture();
  const auto verts = g.internal_vertices();
  REQUIRE(verts.size() == 2);
  bool saw_loop = false;
  for (int d0 : {0, 1})
    for (int d1 : {0, 1}) {
      const MedialGraph h = g.resolve_crossings({{verts[0], d0}, {verts[1], d1}});
      h.validate();
      if (h.free_loops() > 0) {
        saw_loop = true;
        CHECK_FALSE(h.is_lensless());
        bool any_closed = false;
        for (const Strand& s : h.strands()) any_closed |= s.closed;
        CHECK(any_closed);
        CHECK(h.reduce().free_loops() == 0);
        CHECK(h.to_matching().points() == 4);  // loop ignored
      }
    }
  CHECK(saw_loop);
}

TEST_CASE("yang-baxter preserves crossing count and the matching") {
  const MedialGraph g = MedialGraph::from_matching(top_matching(3));
  std::vector<Move> triangles;
  for (const Move& m : g.applicable_moves())
    if (m.kind == MoveKind::YangBaxter) triangles.push_back(m);
  REQUIRE(!triangles.empty());
  const MedialGraph h = g.apply_move(triangles[0]);
  CHECK(h.crossings() == 3);
  CHECK(h.is_lensless());
  CHECK(h.to_matching() == top_matching(3));
  // the move is an involution up to map isomorphism
  const auto back = h.apply_move(*[&] {
    for (const Move& m : h.applicable_moves())
      if (m.kind == MoveKind::YangBaxter) return std::optional<Move>(m);
    return std::optional<Move>();
  }());
  CHECK(back.canonical_key() == g.canonical_key());
}

TEST_CASE("lensless graphs need no move") {
  for (const auto& m : enumerate_matchings(3)) {
    const MedialGraph g = MedialGraph::from_matching(m);
    CHECK_FALSE(g.find_move().has_value());
    CHECK(g.reduce().canonical_key() == g.canonical_key());
  }
}

TEST_CASE("lens with a transversal strand needs yang-baxter first") {
  const MedialGraph g = lens_with_transversal_fixture();
  CHECK(g.crossings() == 5);
  CHECK_FALSE(g.is_lensless());
  const auto moves = g.applicable_moves();
  for (const Move& m : moves) CHECK(m.kind == MoveKind::YangBaxter);
  const auto mv = g.find_move();
  REQUIRE(mv.has_value());
  CHECK(mv->kind == MoveKind::YangBaxter);
  const MedialGraph red = g.reduce();
  CHECK(red.is_lensless());
  CHECK(red.crossings() == 4);
  CHECK(red.to_matching() == M({4, 6, 8, 1, 7, 2, 5, 3}));
}

TEST_CASE("randomized reduction is confluent on the transversal fixture") {
  const MedialGraph g = lens_with_transversal_fixture();
  const Matching expected = g.to_matching();
  for (int k = 0; k < 50; ++k) {
    std::mt19937_64 rng(k);
    const MedialGraph red = g.reduce_randomized(rng);
    CHECK(red.is_lensless());
    CHECK(red.to_matching() == expected);
  }
}

TEST_CASE("multi-resolution stays below the starting matching") {
  const GradedPoset P = GradedPoset::build(3, false);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int id = static_cast<int>(rng() % P.size());
    const MedialGraph g = MedialGraph::from_matching(P.matching_of(id));
    std::vector<std::pair<int, int>> sites;
    for (int v : g.internal_vertices()) {
      const int digit = static_cast<int>(rng() % 3);
      if (digit) sites.push_back({v, digit - 1});
    }
    const Matching down = g.resolve_crossings(sites).to_matching();
    CHECK(P.leq(P.id_of(down), id));
  }
}

TEST_CASE("kappa construction") {
  CHECK(kappa_diagram(top_matching(2), 1) == M({2, 1, 4, 3}));
  // the unique maximum below the n=3 top pairing 1 with 2
  CHECK(kappa_diagram(top_matching(3), 1) == M({2, 1, 5, 6, 3, 4}));
  CHECK_THROWS_AS(kappa_diagram(M({2, 1, 4, 3}), 1), std::invalid_argument);  // class C
  for (int n = 2; n <= 3; ++n)
    for (const auto& m : enumerate_matchings(n))
      for (int i = 1; i <= 2 * n; ++i) {
        if (abc_class(m, i) != BoundaryClass::B) continue;
        const Matching k = kappa_diagram(m, i);
        CHECK(abc_class(k, i) == BoundaryClass::C);
        CHECK(crossing_number(k) < crossing_number(m));
      }
}

TEST_CASE("debug dump carries the whole map") {
  const MedialGraph g = MedialGraph::from_matching(top_matching(2));
  const std::string d = g.debug_dump();
  CHECK(d.find("\"twin\"") != std::string::npos);
  CHECK(d.find("\"next\"") != std::string::npos);
  CHECK(d.find("\"stubs\"") != std::string::npos);
}

TEST_SUITE_END();
