#include <random>
#include <stdexcept>

#include "doctest.h"
#include "uncross/affine.hpp"

using namespace uncross;

namespace {

Matching M(std::vector<int> p) { return Matching(std::move(p)); }

}  // namespace

TEST_SUITE_BEGIN("affine");

TEST_CASE("window validation") {
  CHECK(from_window({1, 2}) == AffinePermutation::identity(1));
  CHECK(from_window({2, 3}) == embed(M({2, 1})));
  CHECK_THROWS_AS(from_window({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(from_window({1, 5}), std::invalid_argument);  // residues collide
  CHECK_THROWS_AS(from_window({1}), std::invalid_argument);
}

TEST_CASE("periodic application") {
  CHECK(AffinePermutation::identity(2).apply(7) == 7);
  CHECK(from_window({3, 4, 5, 6}).apply(5) == 7);
  CHECK(from_window({2, 5, 4, 7}).apply(0) == 3);
  CHECK(from_window({2, 5, 4, 7}).apply(-3) == -2);
}

TEST_CASE("inverse") {
  const auto g = from_window({2, 5, 4, 7});
  const auto gi = g.inverse();
  for (int i = -4; i <= 8; ++i) {
    CHECK(gi.apply(g.apply(i)) == i);
    CHECK(g.apply(gi.apply(i)) == i);
  }
}

TEST_CASE("length") {
  CHECK(length(AffinePermutation::identity(2)) == 0);
  CHECK(length(from_window({3, 4, 5, 6})) == 0);  // pure translation
  CHECK(length(from_window({2, 5, 4, 7})) == 2);
}

TEST_CASE("descents") {
  CHECK(descents(AffinePermutation::identity(2), Side::Left).members.empty());
  CHECK(descents(AffinePermutation::identity(2), Side::Right).members.empty());
  const auto d = descents(from_window({2, 5, 4, 7}), Side::Right);
  CHECK(d.members == std::vector<int>{2, 4});
  // Embedded matchings satisfy g^{-1}(x) = g(x) - 2n, so left and right
  // descent sets coincide on the whole image.
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_matchings(n)) {
      const auto g = embed(m);
      CHECK(descents(g, Side::Left).members == descents(g, Side::Right).members);
    }
}

TEST_CASE("embedding formula and involution law") {
  CHECK(embed(M({2, 1})).window() == std::vector<int>{2, 3});
  CHECK(embed(M({3, 4, 1, 2})).window() == std::vector<int>{3, 4, 5, 6});
  CHECK(embed(M({2, 1, 4, 3})).window() == std::vector<int>{2, 5, 4, 7});
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_matchings(n)) {
      const auto g = embed(m);
      CHECK(g.shift_sum() == 2LL * n * n);
      for (int i = 1; i <= 2 * n; ++i) CHECK(g.apply(g.apply(i)) == i + 2 * n);
      CHECK(matching_of_window(g) == m);
    }
}

TEST_CASE("embedding is injective") {
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate_matchings(n);
    for (size_t a = 0; a < all.size(); ++a)
      for (size_t b = a + 1; b < all.size(); ++b)
        CHECK_FALSE(embed(all[a]) == embed(all[b]));
  }
}

TEST_CASE("bruhat order basics") {
  const auto u = from_window({3, 4, 5, 6});
  const auto w = from_window({2, 5, 4, 7});
  CHECK(bruhat_leq(u, u));
  CHECK(bruhat_leq(u, w));
  CHECK_FALSE(bruhat_leq(w, u));
  // the two noncrossing matchings at n=2 embed incomparably
  const auto a = embed(M({2, 1, 4, 3}));
  const auto b = embed(M({4, 3, 2, 1}));
  CHECK_FALSE(bruhat_leq(a, b));
  CHECK_FALSE(bruhat_leq(b, a));
  CHECK_THROWS_AS(bruhat_leq(u, from_window({2, 3})), std::invalid_argument);
  // different shift sums are incomparable by definition
  CHECK_FALSE(bruhat_leq(AffinePermutation::identity(2), w));
}

TEST_CASE("bruhat order is a partial order on embedded elements") {
  for (int n = 2; n <= 3; ++n) {
    const auto all = enumerate_matchings(n);
    std::vector<AffinePermutation> gs;
    for (const auto& m : all) gs.push_back(embed(m));
    for (size_t a = 0; a < gs.size(); ++a)
      for (size_t b = 0; b < gs.size(); ++b) {
        if (bruhat_leq(gs[a], gs[b]) && bruhat_leq(gs[b], gs[a])) CHECK(a == b);
        if (a == b) continue;
        if (!bruhat_leq(gs[a], gs[b])) continue;
        for (size_t cc = 0; cc < gs.size(); ++cc)
          if (bruhat_leq(gs[b], gs[cc])) CHECK(bruhat_leq(gs[a], gs[cc]));
      }
  }
}

TEST_CASE("bruhat comparisons respect length") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 3; ++n) {
    const auto all = enumerate_matchings(n);
    for (int t = 0; t < 200; ++t) {
      auto g = embed(all[rng() % all.size()]);
      auto h = embed(all[rng() % all.size()]);
      // random simple multiplications preserve the shift sum
      for (int k = 0; k < 3; ++k) {
        const int i = 1 + static_cast<int>(rng() % (2 * n));
        if (rng() & 1) g = g.mult_left_s(i);
        else h = h.mult_right_s(i);
      }
      if (bruhat_leq(g, h)) CHECK(length(g) <= length(h));
      if (bruhat_leq(g, h) && bruhat_leq(h, g)) CHECK(g == h);
    }
  }
}

TEST_CASE("conjugation by a simple reflection") {
  const auto id = AffinePermutation::identity(2);
  for (int i = 1; i <= 4; ++i) CHECK(conj_simple(id, i) == id);
  CHECK(conj_simple(embed(M({2, 1, 4, 3})), 2) == embed(M({3, 4, 1, 2})));
  // exact window equivariance on classes A and B; matching-level equivariance
  // always (class C rewinds the chord but fixes the represented matching)
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_matchings(n))
      for (int i = 1; i <= 2 * n; ++i) {
        const auto h = conj_simple(embed(m), i);
        CHECK(matching_of_window(h) == simple_act(m, i));
        if (abc_class(m, i) != BoundaryClass::C) CHECK(h == embed(simple_act(m, i)));
        else CHECK(matching_of_window(h) == m);
      }
}

TEST_CASE("lengths under conjugation separate class A") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_matchings(n)) {
      const auto g = embed(m);
      const long long full = static_cast<long long>(n) * (n - 1);
      CHECK(length(g) == full - 2 * crossing_number(m));
      for (int i = 1; i <= 2 * n; ++i) {
        const long long diff = length(conj_simple(g, i)) - length(g);
        if (abc_class(m, i) == BoundaryClass::A) CHECK(diff == -2);
        else CHECK(diff == 2);
      }
    }
}

TEST_SUITE_END();
