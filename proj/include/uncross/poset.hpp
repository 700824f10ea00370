// Finite graded posets built from cover relations: the uncrossing posets P_n
// and their bounded versions with an adjoined bottom of rank -1, plus order
// queries, intervals, Moebius values, and the Eulerian / thinness reports.
//
// The heavy interval sweeps come in two routes: an OpenMP-parallel bitset
// kernel and a plain serial reference that walks the cover graph. The tests
// require the two to agree; the benchmark tool compares their speed.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "uncross/bitset.hpp"
#include "uncross/matching.hpp"
#include "uncross/report.hpp"

namespace uncross {

class GradedPoset {
 public:
  // The uncrossing poset on enumerate_matchings(n), with covers generated by
  // covers_down. With includeBottom, a bottom element of rank -1 gets id 0 and
  // is covered by exactly the rank-0 elements; matchings then occupy ids
  // 1..N in canonical enumeration order (ids 0..N-1 otherwise).
  static GradedPoset build(int n, bool includeBottom);

  // A synthetic poset from explicit ranks and covers (test fixtures and
  // negative controls). Every cover must raise the rank by exactly 1.
  static GradedPoset from_covers(std::vector<int> ranks,
                                 std::vector<std::pair<int, int>> covers);

  int size() const { return static_cast<int>(rank_.size()); }
  int n() const { return n_; }
  bool has_bottom() const { return has_bottom_; }
  int bottom_id() const { return has_bottom_ ? 0 : -1; }
  bool is_bottom(int id) const { return has_bottom_ && id == 0; }
  int rank(int id) const { return rank_[id]; }
  int max_rank() const { return max_rank_; }

  // Payload access; throws for the bottom element or synthetic posets.
  const Matching& matching_of(int id) const;
  int id_of(const Matching& m) const;  // -1 if absent
  const std::vector<Matching>& matchings() const { return matchings_; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& covers_up_of(int id) const { return up_adj_[id]; }
  const std::vector<int>& covers_down_of(int id) const { return down_adj_[id]; }

  bool leq(int x, int y) const { return down_[y].test(x); }
  const Bitset& down_set(int y) const { return down_[y]; }
  const Bitset& up_set(int x) const { return up_[x]; }
  const Bitset& odd_rank_mask() const { return odd_mask_; }

  // {z : x <= z <= y}; throws if x, y are incomparable.
  std::vector<int> interval(int x, int y) const;
  Bitset interval_bits(int x, int y) const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // chi(S) = sum over S of (-1)^rank.
  long long chi(const std::vector<int>& ids) const;
  long long chi_interval(int x, int y) const;        // bitset route
  long long chi_interval_naive(int x, int y) const;  // cover-graph BFS route

  // mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z); throws if incomparable.
  long long mobius(int x, int y) const;
  // mu(x,y) for every x <= y, indexed by x (untouched entries are 0).
  std::vector<long long> mobius_column(int y) const;

  // Eulerian test: mu(x,y) = (-1)^(rank(y)-rank(x)) for every x < y.
  // Requires a bounded poset. Parallelizes over y.
  CheckReport is_eulerian(int jobs = 1) const;
  // Independent serial route straight from the definition: every nontrivial
  // interval has as many odd-rank as even-rank elements.
  CheckReport is_eulerian_by_counting() const;

  // Every interval of length two must contain exactly two middle elements.
  CheckReport is_thin() const;

  // chi([x,y]) = 0 for every x < y; parallel bitset kernel.
  CheckReport chi_all_intervals(int jobs = 1) const;

 private:
  void finalize_();  // adjacency, closure bitsets, masks

  int n_ = 0;
  bool has_bottom_ = false;
  std::vector<Matching> matchings_;
  std::map<std::vector<int>, int> index_;  // partner sequence -> matching index
  std::vector<int> rank_;
  int max_rank_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_adj_, down_adj_;
  std::vector<Bitset> down_, up_;
  Bitset odd_mask_;
};

}  // namespace uncross
