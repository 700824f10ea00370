// Executable verification of the order-theoretic statements the Eulerian
// theorem rests on, each swept over an explicit finite universe. Exhaustive
// through n = 4; n = 5 switches the pairwise sweeps to seeded sampling.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "uncross/affine.hpp"
#include "uncross/medial.hpp"
#include "uncross/poset.hpp"
#include "uncross/report.hpp"

namespace uncross {

// Precomputed state shared by the checks at one size: the bounded poset, the
// affine embeddings, the boundary classes and the s_i action in id space.
struct CheckContext {
  CheckContext(int n, int jobs = 1, unsigned long long seed = 0);

  int n;
  int jobs;
  unsigned long long seed;
  GradedPoset P;  // with bottom (id 0)
  std::vector<AffinePermutation> emb;           // by id-1
  std::vector<std::vector<int>> act;            // act[id-1][i-1] = id of s_i . tau
  std::vector<std::vector<BoundaryClass>> cls;  // cls[id-1][i-1]
  std::vector<uint32_t> dl, dr;                 // descent masks, bit i-1

  int num_matchings() const { return static_cast<int>(P.matchings().size()); }
  const AffinePermutation& embed_of(int id) const { return emb[id - 1]; }
  BoundaryClass cls_of(int id, int i) const { return cls[id - 1][i - 1]; }
  int act_of(int id, int i) const { return act[id - 1][i - 1]; }

  bool sampled() const { return n >= 5; }
  // Ordered comparable pairs (x, y) with x <= y, matching ids only. Sampled
  // mode draws at least 10^4 comparable pairs with the fixed seed.
  std::vector<std::pair<int, int>> comparable_pairs() const;
};

using BruhatLeqFn =
    std::function<bool(const AffinePermutation&, const AffinePermutation&)>;

// Resolution order against reversed Bruhat order under the embedding, all
// ordered pairs. `leq` is injectable so corrupted-oracle runs can prove the
// check is not vacuous.
CheckReport check_duality(const CheckContext& c, const BruhatLeqFn& leq = {});
// Boundary classes against the length change of s_i g s_i, and the fixed-point
// law: conjugation fixes the embedding exactly on class C.
CheckReport check_trichotomy(const CheckContext& c);
// length(embed(tau)) = 2 (n(n-1)/2 - c(tau)).
CheckReport check_rank_length(const CheckContext& c);
// Bruhat lifting: f <= g and i in D(g) \ D(f) give f <= s_i g and s_i f <= g,
// on both sides, over all embedded comparable pairs.
CheckReport check_lifting(const CheckContext& c, const BruhatLeqFn& leq = {});
// tau <= eta and i in A(tau) cap B(eta) give tau <= s_i.eta and s_i.tau <= eta.
CheckReport check_action_lifting(const CheckContext& c);
// tau <= eta and i in A(tau) exclude i in C(eta).
CheckReport check_class_exclusion(const CheckContext& c);
// For i in A(tau) cap A(eta): the interval difference sets above eta agree
// after shifting tau by s_i, and [tau,eta] = [tau,s_i.eta] minus the
// difference set, every member of which has class B at i.
CheckReport check_interval_shift(const CheckContext& c);
// For i in A(tau) cap B(eta): s_i maps [tau,eta] to itself; and for any eta
// with i in B(eta), s_i is a parity-swapping involution on the part of
// (bot, eta] with class other than C at i.
CheckReport check_pairing_involution(const CheckContext& c);
// {sigma < eta : i in C(sigma)} plus bottom has a unique maximum kappa, the
// set is the full interval [bot, kappa], and the diagram-level construction
// agrees with it.
CheckReport check_kappa(const CheckContext& c);
CheckReport check_chi_intervals(const CheckContext& c);
CheckReport check_eulerian(const CheckContext& c);
CheckReport check_thin(const CheckContext& c);
// Medial engine: to_matching(from_matching(tau)) = tau, construction lensless
// with exactly c(tau) crossings.
CheckReport check_roundtrip(const CheckContext& c);
// Resolving any subset of crossings in any directions only moves down.
CheckReport check_monotonicity(const CheckContext& c, int random_trials = 1000);
// Randomized move orders reduce every fixture to the same matching.
CheckReport check_confluence(const CheckContext& c, int orders_per_fixture = 100);
CheckReport check_shelling(const CheckContext& c);

std::vector<std::string> all_check_names();
std::vector<std::string> default_check_names(int n);
bool is_check_name(const std::string& name);
CheckReport run_check(const std::string& name, const CheckContext& c);

}  // namespace uncross
