// Fixed-width dynamic bitset used for poset reachability. Down-sets and
// up-sets are rows; intervals are bitwise intersections of a row of each.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace uncross {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  template <class F>
  void for_each(F f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        f(static_cast<int>(k * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  friend int count_and(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (size_t k = 0; k < a.w_.size(); ++k) c += std::popcount(a.w_[k] & b.w_[k]);
    return c;
  }
  friend int count_and3(const Bitset& a, const Bitset& b, const Bitset& c) {
    int n = 0;
    for (size_t k = 0; k < a.w_.size(); ++k)
      n += std::popcount(a.w_[k] & b.w_[k] & c.w_[k]);
    return n;
  }
  friend Bitset and_of(const Bitset& a, const Bitset& b) {
    Bitset r = a;
    r &= b;
    return r;
  }
  // a & b & ~c
  friend Bitset and_minus(const Bitset& a, const Bitset& b, const Bitset& c) {
    Bitset r(a.nbits_);
    for (size_t k = 0; k < a.w_.size(); ++k) r.w_[k] = a.w_[k] & b.w_[k] & ~c.w_[k];
    return r;
  }
  template <class F>
  friend void for_each_and(const Bitset& a, const Bitset& b, F f) {
    for (size_t k = 0; k < a.w_.size(); ++k) {
      uint64_t x = a.w_[k] & b.w_[k];
      while (x) {
        f(static_cast<int>(k * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace uncross
