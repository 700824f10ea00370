// Affine permutations with period 2n in window notation, their length,
// descent sets and Bruhat order, plus the embedding of matchings that serves
// as an independent order oracle for the uncrossing poset.
#pragma once

#include <vector>

#include "uncross/matching.hpp"

namespace uncross {

// A periodic bijection g of the integers with g(i + 2n) = g(i) + 2n, stored
// by its window g(1..2n). Window residues mod 2n are pairwise distinct; the
// shift sum sum(g(i) - i) is then automatically a multiple of 2n, so these
// are the translates of the affine symmetric group (the extended group).
class AffinePermutation {
 public:
  explicit AffinePermutation(std::vector<int> window);
  static AffinePermutation identity(int n);

  int n() const { return static_cast<int>(window_.size()) / 2; }
  int period() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  long long apply(long long i) const;
  AffinePermutation inverse() const;
  long long shift_sum() const;

  // s_i * g and g * s_i, where s_i swaps the integers i and i+1 modulo the
  // period (i = 2n is the affine reflection swapping 2n and 2n+1).
  AffinePermutation mult_left_s(int i) const;
  AffinePermutation mult_right_s(int i) const;

  bool operator==(const AffinePermutation& o) const { return window_ == o.window_; }
  bool operator!=(const AffinePermutation& o) const { return !(*this == o); }

 private:
  std::vector<int> window_;
};

enum class Side { Left, Right };

struct DescentSet {
  Side side;
  std::vector<int> members;  // subset of {1..2n}; 2n plays the role of residue 0
};

AffinePermutation from_window(std::vector<int> values);

// Coxeter length: the number of inversion pairs (i, j) with 1 <= i <= 2n,
// i < j and g(i) > g(j); finite by periodicity.
long long length(const AffinePermutation& g);

// Right descents: i with g(i) > g(i+1). Left descents of g are the right
// descents of its inverse.
DescentSet descents(const AffinePermutation& g, Side side);

// Bruhat order via the dominance criterion: u <= w iff for every i in one
// window and every j in a bounded certificate range,
//   #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}.
// Elements with different shift sums are incomparable; different periods are
// rejected.
bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w);

// The order-reversing embedding of matchings: g_tau(i) = tau(i) if
// tau(i) > i, else tau(i) + 2n. Satisfies g(g(i)) = i + 2n.
AffinePermutation embed(const Matching& tau);

// The matching carried by a window at the residue level: partner(i) =
// g(i) mod 2n. Rejects windows whose residue data is not a matching.
Matching matching_of_window(const AffinePermutation& g);

// s_i g s_i. On embedded matchings this equals embed(simple_act(tau, i))
// whenever i lies in class A or B; for i in class C the conjugate leaves the
// embedded family (it rewinds the chord (i, i+1)) but still represents the
// same matching at the residue level, which is the sense in which conjugation
// fixes g there.
AffinePermutation conj_simple(const AffinePermutation& g, int i);

}  // namespace uncross
