// Matchings of 2n boundary points on a circle, viewed as chord diagrams.
// Boundary points are labeled 1..2n counterclockwise; indices are 1-based
// throughout and arithmetic on them wraps mod 2n (point 2n+1 is point 1).
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace uncross {

// A chord as an ordered endpoint pair (a, b) with a < b.
using Chord = std::pair<int, int>;

// Names a crossing site at the chord-diagram level: two chords of the same
// matching with four distinct endpoints.
struct ChordPair {
  Chord first;
  Chord second;
};

// Classification of a boundary position i relative to a matching:
//   A - the chords through i and i+1 are disjoint and do not cross,
//   B - the chords through i and i+1 cross,
//   C - i is matched directly with i+1.
enum class BoundaryClass { A, B, C };

// A fixed-point-free involution on {1..2n}, stored as its partner sequence.
class Matching {
 public:
  // Validates: even length >= 2, in-range entries, involution, no fixed point.
  explicit Matching(std::vector<int> partner);

  int n() const { return static_cast<int>(partner_.size()) / 2; }
  int points() const { return static_cast<int>(partner_.size()); }
  // 1-based access; partner(i) is the point matched with i.
  int partner(int i) const { return partner_[i - 1]; }
  const std::vector<int>& partners() const { return partner_; }

  Chord chord_through(int i) const;
  std::vector<Chord> chords() const;  // sorted by first endpoint

  bool operator==(const Matching& o) const { return partner_ == o.partner_; }
  bool operator<(const Matching& o) const { return partner_ < o.partner_; }

 private:
  std::vector<int> partner_;
};

Matching make_matching(std::vector<int> partners);

// The matching {(i, i+n)}: the unique maximum of the uncrossing order.
Matching top_matching(int n);

// All (2n-1)!! matchings in lexicographic order of the partner sequence.
// This order defines the element ids used everywhere downstream.
std::vector<Matching> enumerate_matchings(int n);

// True iff the chords cross in any lensless diagram, i.e. exactly one
// endpoint of b lies on the circular arc strictly between the endpoints of a.
// Rejects chords sharing an endpoint.
bool interleaves(Chord a, Chord b);

// Number of interleaving chord pairs; the rank function of the poset.
int crossing_number(const Matching& m);

// All interleaving chord pairs of m, lexicographically ordered.
std::vector<ChordPair> crossing_pairs(const Matching& m);

BoundaryClass abc_class(const Matching& m, int i);

// The action tau -> s_i . tau given by swapping boundary points i and i+1:
// (s_i.tau)(j) = s_i(tau(s_i(j))). Raises the rank by 1 on class A, lowers
// it by 1 on class B and fixes tau on class C.
Matching simple_act(const Matching& m, int i);

// The two smoothings of a crossing: for endpoints a<b<c<d with chords
// (a,c),(b,d), returns the matchings with those chords replaced by
// {(a,b),(c,d)} and {(a,d),(b,c)}. Rejects non-interleaving pairs.
std::pair<Matching, Matching> resolutions(const Matching& m, const ChordPair& pair);

// Lower covers: all results of a single smoothing whose crossing number drops
// by exactly one. (A one-crossing drop forces the smoothed diagram to stay
// lensless, so these are precisely the diagram-level covers.)
std::vector<Matching> covers_down(const Matching& m);

// Upper covers: all eta with m in covers_down(eta), found by re-pairing each
// non-crossing chord pair of m into its crossing configuration.
std::vector<Matching> covers_up(const Matching& m);

}  // namespace uncross
