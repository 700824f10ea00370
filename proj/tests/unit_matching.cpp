#include <algorithm>

#include "doctest.h"
#include "uncross/matching.hpp"

using namespace uncross;

namespace {

Matching M(std::vector<int> p) { return Matching(std::move(p)); }

bool contains(const std::vector<Matching>& v, const Matching& m) {
  return std::find(v.begin(), v.end(), m) != v.end();
}

}  // namespace

TEST_SUITE_BEGIN("matching");

TEST_CASE("construction validates") {
  CHECK(M({2, 1}).n() == 1);
  CHECK(M({3, 4, 1, 2}).partner(2) == 4);
  CHECK_THROWS_AS(M({2, 3, 1, 4}), std::invalid_argument);  // not an involution
  CHECK_THROWS_AS(M({1, 2}), std::invalid_argument);        // fixed points
  CHECK_THROWS_AS(M({2, 1, 3}), std::invalid_argument);     // odd length
  CHECK_THROWS_AS(M({2, 5, 1, 3}), std::invalid_argument);  // out of range
}

TEST_CASE("enumeration is lexicographic with double-factorial counts") {
  CHECK(enumerate_matchings(1).size() == 1);
  CHECK(enumerate_matchings(2).size() == 3);
  CHECK(enumerate_matchings(3).size() == 15);
  CHECK(enumerate_matchings(4).size() == 105);
  const auto v = enumerate_matchings(2);
  CHECK(v[0] == M({2, 1, 4, 3}));
  CHECK(v[1] == M({3, 4, 1, 2}));
  CHECK(v[2] == M({4, 3, 2, 1}));
  CHECK(std::is_sorted(v.begin(), v.end()));
  CHECK_THROWS_AS(enumerate_matchings(0), std::invalid_argument);
}

TEST_CASE("interleaves") {
  CHECK(interleaves({1, 3}, {2, 4}));
  CHECK_FALSE(interleaves({1, 2}, {3, 4}));
  CHECK_FALSE(interleaves({2, 9}, {3, 8}));  // nested
  CHECK(interleaves({2, 9}, {3, 10}));
  CHECK_THROWS_AS(interleaves({1, 3}, {3, 5}), std::invalid_argument);
}

TEST_CASE("crossing number") {
  CHECK(crossing_number(M({2, 1, 4, 3})) == 0);
  // the ten-point example: {(1,7),(2,9),(3,8),(4,10),(5,6)}
  CHECK(crossing_number(M({7, 9, 8, 10, 6, 5, 1, 3, 2, 4})) == 5);
  CHECK(crossing_number(top_matching(3)) == 3);
  CHECK(crossing_number(top_matching(4)) == 6);
}

TEST_CASE("top matching is the unique maximum of the rank function") {
  for (int n = 1; n <= 4; ++n) {
    const int full = n * (n - 1) / 2;
    int at_max = 0;
    for (const auto& m : enumerate_matchings(n)) {
      CHECK(crossing_number(m) <= full);
      if (crossing_number(m) == full) {
        ++at_max;
        CHECK(m == top_matching(n));
      }
    }
    CHECK(at_max == 1);
  }
}

TEST_CASE("boundary classes") {
  const Matching t = M({2, 1, 4, 3});
  CHECK(abc_class(t, 1) == BoundaryClass::C);
  CHECK(abc_class(t, 2) == BoundaryClass::A);
  CHECK(abc_class(t, 3) == BoundaryClass::C);
  CHECK(abc_class(t, 4) == BoundaryClass::A);
  CHECK(abc_class(M({3, 4, 1, 2}), 4) == BoundaryClass::B);  // wraps to point 1
}

TEST_CASE("simple action examples and involution law") {
  CHECK(simple_act(M({2, 1, 4, 3}), 2) == M({3, 4, 1, 2}));
  CHECK(simple_act(M({2, 1, 4, 3}), 1) == M({2, 1, 4, 3}));
  CHECK(simple_act(M({3, 4, 1, 2}), 4) == M({2, 1, 4, 3}));
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_matchings(n))
      for (int i = 1; i <= 2 * n; ++i) CHECK(simple_act(simple_act(m, i), i) == m);
}

TEST_CASE("class trichotomy matches the rank change of the action") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_matchings(n)) {
      const int c = crossing_number(m);
      for (int i = 1; i <= 2 * n; ++i) {
        const int cc = crossing_number(simple_act(m, i));
        switch (abc_class(m, i)) {
          case BoundaryClass::A: CHECK(cc == c + 1); break;
          case BoundaryClass::B: CHECK(cc == c - 1); break;
          case BoundaryClass::C: CHECK(cc == c); break;
        }
      }
    }
}

TEST_CASE("resolutions") {
  const auto [r0, r1] = resolutions(M({3, 4, 1, 2}), {{1, 3}, {2, 4}});
  CHECK(r0 == M({2, 1, 4, 3}));
  CHECK(r1 == M({4, 3, 2, 1}));
  const auto [s0, s1] = resolutions(top_matching(3), {{1, 4}, {2, 5}});
  CHECK(s0 == M({2, 1, 6, 5, 4, 3}));  // {(1,2),(4,5),(3,6)}
  CHECK(s1 == M({5, 4, 6, 2, 1, 3}));  // {(1,5),(2,4),(3,6)}
  CHECK_THROWS_AS(resolutions(M({2, 1, 4, 3}), {{1, 2}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(resolutions(M({3, 4, 1, 2}), {{1, 2}, {3, 4}}), std::invalid_argument);
}

TEST_CASE("resolutions never raise the crossing number") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& m : enumerate_matchings(n)) {
      const int c = crossing_number(m);
      for (const auto& pr : crossing_pairs(m)) {
        const auto [a, b] = resolutions(m, pr);
        CHECK(crossing_number(a) <= c - 1);
        CHECK(crossing_number(b) <= c - 1);
      }
    }
}

TEST_CASE("covers_down") {
  const auto cd = covers_down(M({3, 4, 1, 2}));
  REQUIRE(cd.size() == 2);
  CHECK(contains(cd, M({2, 1, 4, 3})));
  CHECK(contains(cd, M({4, 3, 2, 1})));
  CHECK(covers_down(M({2, 1, 4, 3})).empty());
  // every rank-2 element of the n=3 poset has exactly four lower covers
  for (const auto& m : enumerate_matchings(3))
    if (crossing_number(m) == 2) CHECK(covers_down(m).size() == 4);
}

TEST_CASE("covers_up") {
  const auto cu = covers_up(M({2, 1, 4, 3}));
  REQUIRE(cu.size() == 1);
  CHECK(cu[0] == M({3, 4, 1, 2}));
  for (int n = 1; n <= 4; ++n) CHECK(covers_up(top_matching(n)).empty());
  int up_edges_from_rank0 = 0;
  for (const auto& m : enumerate_matchings(3))
    if (crossing_number(m) == 0)
      up_edges_from_rank0 += static_cast<int>(covers_up(m).size());
  CHECK(up_edges_from_rank0 == 12);
}

TEST_CASE("covers_down and covers_up are mutually consistent") {
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate_matchings(n);
    for (const auto& m : all) {
      for (const auto& lo : covers_down(m)) CHECK(contains(covers_up(lo), m));
      for (const auto& hi : covers_up(m)) CHECK(contains(covers_down(hi), m));
    }
  }
}

TEST_CASE("noncrossing counts are Catalan") {
  const int catalan[6] = {0, 1, 2, 5, 14, 42};
  for (int n = 1; n <= 5; ++n) {
    int nc = 0;
    for (const auto& m : enumerate_matchings(n))
      if (crossing_number(m) == 0) ++nc;
    CHECK(nc == catalan[n]);
  }
}

TEST_SUITE_END();
