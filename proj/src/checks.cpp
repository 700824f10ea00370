#include "uncross/checks.hpp"

#include "uncross/shelling.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uncross {

namespace {

int effective_jobs(int jobs) {
#ifdef _OPENMP
  return jobs >= 1 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

std::string pstr(const Matching& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.partners().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m.partners()[i]);
  }
  return s + "]";
}

std::string pstr(const CheckContext& c, int id) {
  return c.P.is_bottom(id) ? "bot" : pstr(c.P.matching_of(id));
}

// Merge per-slot violation buffers in slot order so reports are independent
// of the thread schedule.
void merge(CheckReport& rep, std::vector<std::vector<std::string>>& viol,
           std::vector<long long>& cases) {
  for (size_t k = 0; k < viol.size(); ++k) {
    rep.casesChecked += cases[k];
    for (auto& v : viol[k]) rep.violations.push_back(std::move(v));
  }
}

}  // namespace

CheckContext::CheckContext(int n_, int jobs_, unsigned long long seed_)
    : n(n_), jobs(jobs_), seed(seed_), P(GradedPoset::build(n_, true)) {
  const int M = num_matchings();
  const int m = 2 * n;
  emb.reserve(M);
  act.assign(M, std::vector<int>(m));
  cls.assign(M, std::vector<BoundaryClass>(m));
  dl.assign(M, 0);
  dr.assign(M, 0);
  for (int k = 0; k < M; ++k) {
    const Matching& tau = P.matchings()[k];
    emb.push_back(embed(tau));
    for (int i = 1; i <= m; ++i) {
      act[k][i - 1] = P.id_of(simple_act(tau, i));
      cls[k][i - 1] = abc_class(tau, i);
    }
    for (int i : descents(emb.back(), Side::Left).members) dl[k] |= 1u << (i - 1);
    for (int i : descents(emb.back(), Side::Right).members) dr[k] |= 1u << (i - 1);
  }
}

std::vector<std::pair<int, int>> CheckContext::comparable_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int M = num_matchings();
  if (!sampled()) {
    for (int y = 1; y <= M; ++y)
      P.down_set(y).for_each([&](int x) {
        if (x != 0) out.push_back({x, y});
      });
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> used;
  size_t attempts = 0;
  while (out.size() < 10000 && attempts < 4000000) {
    ++attempts;
    const int x = 1 + static_cast<int>(rng() % M);
    const int y = 1 + static_cast<int>(rng() % M);
    if (!P.leq(x, y)) continue;
    if (used.insert({x, y}).second) out.push_back({x, y});
  }
  return out;
}

// ---------------------------------------------------------------------------

CheckReport check_duality(const CheckContext& c, const BruhatLeqFn& leq_in) {
  const BruhatLeqFn leq = leq_in ? leq_in : BruhatLeqFn(static_cast<bool (*)(
      const AffinePermutation&, const AffinePermutation&)>(&bruhat_leq));
  CheckReport rep;
  rep.name = "duality";
  rep.universe = "all ordered matching pairs (tau, eta): tau <= eta in the "
                 "resolution order iff embed(eta) <= embed(tau) in Bruhat order";
  const int M = c.num_matchings();
  std::vector<std::vector<std::string>> viol(M + 1);
  std::vector<long long> cases(M + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(c.jobs))
#endif
  for (int x = 1; x <= M; ++x) {
    for (int y = 1; y <= M; ++y) {
      ++cases[x];
      const bool poset = c.P.leq(x, y);
      const bool bruhat = leq(c.embed_of(y), c.embed_of(x));
      if (poset != bruhat)
        viol[x].push_back("pair (" + pstr(c, x) + ", " + pstr(c, y) + "): order " +
                          (poset ? "holds" : "fails") + " but Bruhat " +
                          (bruhat ? "holds" : "fails"));
    }
  }
  merge(rep, viol, cases);
  return rep;
}

CheckReport check_trichotomy(const CheckContext& c) {
  CheckReport rep;
  rep.name = "trichotomy";
  rep.universe = "all (tau, i): boundary class against conjugation by s_i -- "
                 "class A drops the length by 2 with exact window equivariance, "
                 "class B raises it by 2 with exact window equivariance, class C "
                 "keeps the represented matching fixed; descent sets contain i "
                 "exactly on class A";
  const int M = c.num_matchings();
  for (int id = 1; id <= M; ++id) {
    const auto& g = c.embed_of(id);
    const long long lg = length(g);
    for (int i = 1; i <= 2 * c.n; ++i) {
      ++rep.casesChecked;
      const std::string at = "(" + pstr(c, id) + ", i=" + std::to_string(i) + ")";
      const AffinePermutation h = conj_simple(g, i);
      const long long lh = length(h);
      const BoundaryClass bc = c.cls_of(id, i);
      // Residue-level equivariance: the conjugate always represents s_i.tau.
      if (!(matching_of_window(h) == c.P.matching_of(c.act_of(id, i))))
        rep.violations.push_back("conjugate does not represent s_i.tau at " + at);
      if (bc == BoundaryClass::A) {
        if (lh != lg - 2 || !(h == c.embed_of(c.act_of(id, i))))
          rep.violations.push_back("class A expects an exact length-2 drop at " + at);
      } else if (bc == BoundaryClass::B) {
        if (lh != lg + 2 || !(h == c.embed_of(c.act_of(id, i))))
          rep.violations.push_back("class B expects an exact length-2 rise at " + at);
      } else {
        if (c.act_of(id, i) != id || ((g.apply(i) - 1) % (2 * c.n)) + 1 != (i % (2 * c.n)) + 1)
          rep.violations.push_back("class C expects a fixed matching and g(i) = i+1 at " +
                                   at);
      }
      if (lh < lg && bc != BoundaryClass::A)
        rep.violations.push_back("length drop outside class A at " + at);
      // Descents of the embedding detect class A and nothing else.
      const bool desc = ((c.dl[id - 1] >> (i - 1)) & 1u) != 0;
      if (desc != (bc == BoundaryClass::A))
        rep.violations.push_back("left descent set disagrees with class A at " + at);
      const bool rdesc = ((c.dr[id - 1] >> (i - 1)) & 1u) != 0;
      if (rdesc != (bc == BoundaryClass::A))
        rep.violations.push_back("right descent set disagrees with class A at " + at);
    }
  }
  return rep;
}

CheckReport check_rank_length(const CheckContext& c) {
  CheckReport rep;
  rep.name = "rank-length";
  rep.universe = "all tau: length(embed(tau)) = 2(n(n-1)/2 - c(tau))";
  const long long full = static_cast<long long>(c.n) * (c.n - 1) / 2;
  for (int id = 1; id <= c.num_matchings(); ++id) {
    ++rep.casesChecked;
    const long long want = 2 * (full - c.P.rank(id));
    const long long got = length(c.embed_of(id));
    if (got != want)
      rep.violations.push_back("length(embed(" + pstr(c, id) + "))=" +
                               std::to_string(got) + " expected " + std::to_string(want));
  }
  return rep;
}

CheckReport check_lifting(const CheckContext& c, const BruhatLeqFn& leq_in) {
  const BruhatLeqFn leq = leq_in ? leq_in : BruhatLeqFn(static_cast<bool (*)(
      const AffinePermutation&, const AffinePermutation&)>(&bruhat_leq));
  CheckReport rep;
  rep.name = "lifting";
  rep.universe = "all embedded comparable pairs f <= g, all residues, both sides";
  const auto pairs = c.comparable_pairs();
  const int m = 2 * c.n;
  std::vector<std::vector<std::string>> viol(pairs.size());
  std::vector<long long> cases(pairs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(c.jobs))
#endif
  for (size_t k = 0; k < pairs.size(); ++k) {
    // tau <= eta dualizes to f = embed(eta) <= g = embed(tau).
    const int tx = pairs[k].first, ty = pairs[k].second;
    const AffinePermutation& f = c.embed_of(ty);
    const AffinePermutation& g = c.embed_of(tx);
    const uint32_t dlf = c.dl[ty - 1], dlg = c.dl[tx - 1];
    const uint32_t drf = c.dr[ty - 1], drg = c.dr[tx - 1];
    for (int i = 1; i <= m; ++i) {
      const uint32_t bit = 1u << (i - 1);
      ++cases[k];
      if ((dlg & bit) && !(dlf & bit)) {
        if (!leq(f, g.mult_left_s(i)) || !leq(f.mult_left_s(i), g))
          viol[k].push_back("left lifting fails at (" + pstr(c, ty) + " <= " +
                            pstr(c, tx) + ", i=" + std::to_string(i) + ")");
      }
      ++cases[k];
      if ((drg & bit) && !(drf & bit)) {
        if (!leq(f, g.mult_right_s(i)) || !leq(f.mult_right_s(i), g))
          viol[k].push_back("right lifting fails at (" + pstr(c, ty) + " <= " +
                            pstr(c, tx) + ", i=" + std::to_string(i) + ")");
      }
    }
  }
  merge(rep, viol, cases);
  return rep;
}

CheckReport check_action_lifting(const CheckContext& c) {
  CheckReport rep;
  rep.name = "action-lifting";
  rep.universe = "all tau <= eta and i in A(tau) cap B(eta): tau <= s_i.eta and "
                 "s_i.tau <= eta";
  for (auto [x, y] : c.comparable_pairs()) {
    for (int i = 1; i <= 2 * c.n; ++i) {
      if (c.cls_of(x, i) != BoundaryClass::A || c.cls_of(y, i) != BoundaryClass::B)
        continue;
      ++rep.casesChecked;
      if (!c.P.leq(x, c.act_of(y, i)) || !c.P.leq(c.act_of(x, i), y))
        rep.violations.push_back("fails at (" + pstr(c, x) + " <= " + pstr(c, y) +
                                 ", i=" + std::to_string(i) + ")");
    }
  }
  return rep;
}

CheckReport check_class_exclusion(const CheckContext& c) {
  CheckReport rep;
  rep.name = "class-exclusion";
  rep.universe = "all tau <= eta and all i: i in A(tau) forbids i in C(eta)";
  for (auto [x, y] : c.comparable_pairs()) {
    for (int i = 1; i <= 2 * c.n; ++i) {
      ++rep.casesChecked;
      if (c.cls_of(x, i) == BoundaryClass::A && c.cls_of(y, i) == BoundaryClass::C)
        rep.violations.push_back("fails at (" + pstr(c, x) + " <= " + pstr(c, y) +
                                 ", i=" + std::to_string(i) + ")");
    }
  }
  return rep;
}

CheckReport check_interval_shift(const CheckContext& c) {
  CheckReport rep;
  rep.name = "interval-shift";
  rep.universe = "all tau <= eta and i in A(tau) cap A(eta): difference-set "
                 "identity, interval decomposition, class-B membership";
  for (auto [x, y] : c.comparable_pairs()) {
    for (int i = 1; i <= 2 * c.n; ++i) {
      if (c.cls_of(x, i) != BoundaryClass::A || c.cls_of(y, i) != BoundaryClass::A)
        continue;
      ++rep.casesChecked;
      const int sx = c.act_of(x, i), sy = c.act_of(y, i);
      const std::string at =
          "(" + pstr(c, x) + " <= " + pstr(c, y) + ", i=" + std::to_string(i) + ")";
      // {sigma : tau <= sigma <= s_i.eta, sigma not<= eta}
      const Bitset lhs = and_minus(c.P.up_set(x), c.P.down_set(sy), c.P.down_set(y));
      const Bitset rhs = and_minus(c.P.up_set(sx), c.P.down_set(sy), c.P.down_set(y));
      if (!(lhs == rhs)) rep.violations.push_back("difference sets differ at " + at);
      // [tau,eta] = [tau,s_i.eta] \ lhs
      Bitset drop = and_of(c.P.up_set(x), c.P.down_set(sy));
      drop &= c.P.down_set(y);
      if (!(drop == c.P.interval_bits(x, y)))
        rep.violations.push_back("interval decomposition fails at " + at);
      bool all_b = true;
      lhs.for_each([&](int z) {
        if (c.cls_of(z, i) != BoundaryClass::B) all_b = false;
      });
      if (!all_b)
        rep.violations.push_back("difference set leaves class B at " + at);
    }
  }
  return rep;
}

CheckReport check_pairing_involution(const CheckContext& c) {
  CheckReport rep;
  rep.name = "pairing-involution";
  rep.universe = "s_i stability of [tau,eta] for i in A(tau) cap B(eta); "
                 "parity-swapping involution on the non-C part of (bot,eta]";
  for (auto [x, y] : c.comparable_pairs()) {
    for (int i = 1; i <= 2 * c.n; ++i) {
      if (c.cls_of(x, i) != BoundaryClass::A || c.cls_of(y, i) != BoundaryClass::B)
        continue;
      ++rep.casesChecked;
      bool ok = true;
      for_each_and(c.P.up_set(x), c.P.down_set(y), [&](int z) {
        if (!ok || c.P.is_bottom(z)) return;
        const int sz = c.act_of(z, i);
        if (!c.P.leq(x, sz) || !c.P.leq(sz, y)) ok = false;
        if (c.cls_of(z, i) == BoundaryClass::C) ok = false;  // parity could not flip
      });
      if (!ok)
        rep.violations.push_back("interval not s_i-stable at (" + pstr(c, x) + " <= " +
                                 pstr(c, y) + ", i=" + std::to_string(i) + ")");
    }
  }
  // The bottom case: for i in B(eta), sigma -> s_i.sigma restricted to
  // {sigma in (bot, eta] : i not in C(sigma)} is a parity-swapping involution.
  const int M = c.num_matchings();
  for (int y = 1; y <= M; ++y) {
    for (int i = 1; i <= 2 * c.n; ++i) {
      if (c.cls_of(y, i) != BoundaryClass::B) continue;
      ++rep.casesChecked;
      bool ok = true;
      c.P.down_set(y).for_each([&](int z) {
        if (!ok || c.P.is_bottom(z)) return;
        if (c.cls_of(z, i) == BoundaryClass::C) return;
        const int sz = c.act_of(z, i);
        if (!c.P.leq(sz, y) || c.P.is_bottom(sz)) ok = false;
        else if (c.cls_of(sz, i) == BoundaryClass::C) ok = false;
        else if (c.act_of(sz, i) != z) ok = false;  // involution
        else if ((c.P.rank(sz) - c.P.rank(z)) * (c.P.rank(sz) - c.P.rank(z)) != 1)
          ok = false;  // parity must flip by exactly one rank
      });
      if (!ok)
        rep.violations.push_back("bottom-case involution fails at (eta=" + pstr(c, y) +
                                 ", i=" + std::to_string(i) + ")");
    }
  }
  return rep;
}

CheckReport check_kappa(const CheckContext& c) {
  CheckReport rep;
  rep.name = "kappa";
  rep.universe = "all eta with c(eta) >= 1 and i in B(eta): unique maximum of "
                 "S = {sigma < eta : i in C(sigma)} + bot, S = [bot,kappa], "
                 "diagram construction agrees";
  const int M = c.num_matchings();
  std::vector<std::pair<int, int>> sites;
  for (int y = 1; y <= M; ++y) {
    if (c.P.rank(y) < 1) continue;
    bool b_empty = true;
    for (int i = 1; i <= 2 * c.n; ++i)
      if (c.cls_of(y, i) == BoundaryClass::B) {
        b_empty = false;
        sites.push_back({y, i});
      }
    if (b_empty)
      rep.violations.push_back("B(eta) empty though c(eta) >= 1, eta=" + pstr(c, y));
  }
  if (c.sampled()) {
    std::mt19937_64 rng(c.seed + 1);
    std::shuffle(sites.begin(), sites.end(), rng);
    if (sites.size() > 10000) sites.resize(10000);
    std::sort(sites.begin(), sites.end());
  }
  std::vector<std::vector<std::string>> viol(sites.size());
  std::vector<long long> cases(sites.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(c.jobs))
#endif
  for (size_t k = 0; k < sites.size(); ++k) {
    const auto [y, i] = sites[k];
    ++cases[k];
    const std::string at = "(eta=" + pstr(c, y) + ", i=" + std::to_string(i) + ")";
    std::vector<int> S{0};
    c.P.down_set(y).for_each([&](int z) {
      if (z == y || c.P.is_bottom(z)) return;
      if (c.cls_of(z, i) == BoundaryClass::C) S.push_back(z);
    });
    std::vector<int> maxima;
    for (int z : S) {
      bool dominated = false;
      for (int w : S)
        if (w != z && c.P.leq(z, w)) dominated = true;
      if (!dominated) maxima.push_back(z);
    }
    if (maxima.size() != 1) {
      viol[k].push_back("S has " + std::to_string(maxima.size()) + " maxima at " + at);
      continue;
    }
    const int kap = maxima[0];
    std::vector<int> interval = c.P.interval(0, kap);
    std::vector<int> sorted_s = S;
    std::sort(sorted_s.begin(), sorted_s.end());
    if (sorted_s != interval) {
      viol[k].push_back("S is not the interval [bot, kappa] at " + at);
      continue;
    }
    const Matching got = kappa_diagram(c.P.matching_of(y), i);
    if (c.P.id_of(got) != kap)
      viol[k].push_back("diagram kappa " + pstr(got) + " differs from poset kappa " +
                        pstr(c, kap) + " at " + at);
  }
  merge(rep, viol, cases);
  return rep;
}

CheckReport check_chi_intervals(const CheckContext& c) {
  return c.P.chi_all_intervals(c.jobs);
}

CheckReport check_eulerian(const CheckContext& c) {
  CheckReport rep = c.P.is_eulerian(c.jobs);
  if (c.n <= 3) {
    // Cross-validate the mobius route against the definition.
    const CheckReport byc = c.P.is_eulerian_by_counting();
    if (byc.pass() != rep.pass() || byc.casesChecked != rep.casesChecked)
      rep.violations.push_back("mobius route disagrees with the parity-count route");
  }
  return rep;
}

CheckReport check_thin(const CheckContext& c) { return c.P.is_thin(); }

CheckReport check_roundtrip(const CheckContext& c) {
  CheckReport rep;
  rep.name = "roundtrip";
  rep.universe = "all tau: to_matching(from_matching(tau)) = tau, lensless, "
                 "crossings = c(tau)";
  const int M = c.num_matchings();
  std::vector<std::vector<std::string>> viol(M + 1);
  std::vector<long long> cases(M + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(c.jobs))
#endif
  for (int id = 1; id <= M; ++id) {
    ++cases[id];
    const Matching& tau = c.P.matching_of(id);
    const MedialGraph g = MedialGraph::from_matching(tau);
    if (!g.is_lensless()) viol[id].push_back("construction not lensless: " + pstr(tau));
    if (g.crossings() != c.P.rank(id))
      viol[id].push_back("crossing count mismatch: " + pstr(tau));
    if (!(g.to_matching() == tau)) viol[id].push_back("roundtrip differs: " + pstr(tau));
  }
  merge(rep, viol, cases);
  return rep;
}

CheckReport check_monotonicity(const CheckContext& c, int random_trials) {
  CheckReport rep;
  rep.name = "monotonicity";
  rep.universe = c.n <= 3 ? "all tau and all resolution assignments (skip/0/1 per crossing)"
                          : "seeded random (tau, assignment) trials";
  auto run_case = [&](int id, const std::vector<std::pair<int, int>>& sites) {
    ++rep.casesChecked;
    const MedialGraph g = MedialGraph::from_matching(c.P.matching_of(id));
    const Matching down = g.resolve_crossings(sites).to_matching();
    const int did = c.P.id_of(down);
    if (!c.P.leq(did, id))
      rep.violations.push_back("resolution escapes the down-set of " + pstr(c, id));
  };
  if (c.n <= 3) {
    for (int id = 1; id <= c.num_matchings(); ++id) {
      const MedialGraph g = MedialGraph::from_matching(c.P.matching_of(id));
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
        run_case(id, sites);
      }
    }
  } else {
    std::mt19937_64 rng(c.seed + 2);
    for (int t = 0; t < random_trials; ++t) {
      const int id = 1 + static_cast<int>(rng() % c.num_matchings());
      const MedialGraph g = MedialGraph::from_matching(c.P.matching_of(id));
      std::vector<std::pair<int, int>> sites;
      for (int v : g.internal_vertices()) {
        const int digit = static_cast<int>(rng() % 3);
        if (digit) sites.push_back({v, digit - 1});
      }
      run_case(id, sites);
    }
  }
  return rep;
}

CheckReport check_confluence(const CheckContext& c, int orders_per_fixture) {
  CheckReport rep;
  rep.name = "confluence";
  rep.universe = "randomized move orders on lens-bearing fixtures reach one matching";
  // Fixtures: single and double resolutions of the top diagram create lenses,
  // kinks and loops once n >= 3.
  std::vector<MedialGraph> fixtures;
  const Matching top = top_matching(c.n);
  const MedialGraph g0 = MedialGraph::from_matching(top);
  const int q12 = g0.crossing_of(1, 2);
  if (q12 >= 0) {
    fixtures.push_back(g0.resolve_crossing(q12, 0));
    fixtures.push_back(g0.resolve_crossing(q12, 1));
  }
  const auto verts = g0.internal_vertices();
  if (verts.size() >= 2) {
    std::vector<std::pair<int, int>> all0, alt;
    for (size_t k = 0; k < verts.size(); ++k) {
      all0.push_back({verts[k], 0});
      alt.push_back({verts[k], static_cast<int>(k % 2)});
    }
    fixtures.push_back(g0.resolve_crossings(all0));
    fixtures.push_back(g0.resolve_crossings(alt));
  }
  if (c.n >= 2) {
    const Matching second = c.P.matching_of(c.P.id_of(top) - 1);
    const MedialGraph g1 = MedialGraph::from_matching(second);
    const auto v1 = g1.internal_vertices();
    if (!v1.empty()) fixtures.push_back(g1.resolve_crossing(v1[0], 1));
  }
  for (size_t fi = 0; fi < fixtures.size(); ++fi) {
    const Matching expected = fixtures[fi].to_matching();
    for (int k = 0; k < orders_per_fixture; ++k) {
      ++rep.casesChecked;
      std::mt19937_64 rng(c.seed + 1000 * fi + k);
      const MedialGraph red = fixtures[fi].reduce_randomized(rng);
      if (!red.is_lensless()) {
        rep.violations.push_back("randomized reduction left a lens, fixture " +
                                 std::to_string(fi));
        continue;
      }
      if (!(red.to_matching() == expected))
        rep.violations.push_back("randomized reduction changed the matching, fixture " +
                                 std::to_string(fi) + " order " + std::to_string(k));
    }
  }
  return rep;
}

CheckReport check_shelling(const CheckContext& c) {
  if (c.n != 3) {
    CheckReport rep;
    rep.name = "shelling";
    rep.universe = "the explicit labeling of the bounded n=3 poset";
    rep.violations.push_back("shelling check is only defined for n=3");
    return rep;
  }
  ShellingResult res = p3_shelling_search(c.P, false);
  if (res.relabeling > 0)
    res.report.universe += " (passed under dihedral relabeling " +
                           std::to_string(res.relabeling) + ")";
  return res.report;
}

// ---------------------------------------------------------------------------

std::vector<std::string> all_check_names() {
  return {"eulerian",       "thin",          "chi-intervals",  "duality",
          "trichotomy",     "rank-length",   "lifting",        "action-lifting",
          "class-exclusion", "interval-shift", "pairing-involution", "kappa",
          "roundtrip",      "monotonicity",  "confluence",     "shelling"};
}

std::vector<std::string> default_check_names(int n) {
  std::vector<std::string> names = {"eulerian",        "thin",
                                    "duality",         "lifting",
                                    "action-lifting",  "class-exclusion",
                                    "interval-shift",  "pairing-involution",
                                    "kappa",           "confluence"};
  if (n == 3) names.push_back("shelling");
  return names;
}

bool is_check_name(const std::string& name) {
  const auto names = all_check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckReport run_check(const std::string& name, const CheckContext& c) {
  if (name == "eulerian") return check_eulerian(c);
  if (name == "thin") return check_thin(c);
  if (name == "chi-intervals") return check_chi_intervals(c);
  if (name == "duality") return check_duality(c);
  if (name == "trichotomy") return check_trichotomy(c);
  if (name == "rank-length") return check_rank_length(c);
  if (name == "lifting") return check_lifting(c);
  if (name == "action-lifting") return check_action_lifting(c);
  if (name == "class-exclusion") return check_class_exclusion(c);
  if (name == "interval-shift") return check_interval_shift(c);
  if (name == "pairing-involution") return check_pairing_involution(c);
  if (name == "kappa") return check_kappa(c);
  if (name == "roundtrip") return check_roundtrip(c);
  if (name == "monotonicity") return check_monotonicity(c);
  if (name == "confluence") return check_confluence(c);
  if (name == "shelling") return check_shelling(c);
  throw std::invalid_argument("unknown check: " + name);
}

}  // namespace uncross
