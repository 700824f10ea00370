// Edge labelings of bounded graded posets and the EL property checker:
// every interval must have exactly one increasing maximal chain, and that
// chain must be lexicographically least among the interval's maximal chains.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "uncross/poset.hpp"
#include "uncross/report.hpp"

namespace uncross {

struct EdgeLabeling {
  // Cover edge (lower, upper) -> symbol. Symbols compare by integer value.
  std::map<std::pair<int, int>, int> label;
  std::vector<std::string> symbol_names;  // indexed by symbol
};

// strict=false tests weakly increasing chains, strict=true strictly
// increasing. Rejects labelings that miss a Hasse edge.
CheckReport el_check(const GradedPoset& P, const EdgeLabeling& L, bool strict = false);

// The explicit labeling of the bounded n = 3 poset. The five noncrossing
// matchings act as the label alphabet: a1 and a2 are the two all-short-chord
// matchings, b1..b3 contain the long chords (3,6), (1,4), (2,5); symbol order
// is a1 < b1 < b2 < b3 < a2. Covers from the bottom are labeled by their top
// atom; covers eta < tau are labeled by the atom forced by the rank of tau
// (see the four rules in the implementation). Every uniqueness clause is
// asserted during construction.
// `relabel`, when given, permutes the boundary points 1..6 first.
EdgeLabeling p3_el_labeling(const GradedPoset& P, const std::vector<int>& relabel = {});

struct ShellingResult {
  bool pass = false;
  int relabeling = -1;  // index of the dihedral relabeling that passed, 0 = identity
  CheckReport report;
  EdgeLabeling labeling;
};

// Runs el_check under the reference point assignment; if it fails, retries
// all 12 dihedral relabelings of the boundary points and reports the first
// passing one.
ShellingResult p3_shelling_search(const GradedPoset& P, bool strict = false);

}  // namespace uncross
