#include "uncross/affine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace uncross {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

AffinePermutation::AffinePermutation(std::vector<int> window)
    : window_(std::move(window)) {
  const int m = static_cast<int>(window_.size());
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("affine: window size must be even and >= 2");
  std::vector<char> seen(m, 0);
  for (int v : window_) {
    int r = ((v - 1) % m + m) % m;  // residue class of v, 0-based
    if (seen[r])
      throw std::invalid_argument("affine: window residues collide (value " +
                                  std::to_string(v) + ")");
    seen[r] = 1;
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<int> w(2 * n);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(std::move(w));
}

long long AffinePermutation::apply(long long i) const {
  const long long m = period();
  const long long k = floor_div(i - 1, m);
  return window_[static_cast<size_t>(i - 1 - k * m)] + k * m;
}

AffinePermutation AffinePermutation::inverse() const {
  const int m = period();
  std::vector<int> w(m);
  for (int j = 1; j <= m; ++j) {
    const long long v = window_[j - 1];
    // g(j) = v gives g^{-1}(v - m k) = j - m k; land v - m k in 1..m.
    const long long k = floor_div(v - 1, m);
    w[static_cast<size_t>(v - 1 - k * m)] = static_cast<int>(j - k * m);
  }
  return AffinePermutation(std::move(w));
}

long long AffinePermutation::shift_sum() const {
  long long s = 0;
  for (int i = 1; i <= period(); ++i) s += window_[i - 1] - i;
  return s;
}

AffinePermutation AffinePermutation::mult_left_s(int i) const {
  const int m = period();
  if (i < 1 || i > m) throw std::invalid_argument("mult_left_s: bad index");
  auto s = [&](long long x) {
    const long long r = ((x - i) % m + m) % m;
    if (r == 0) return x + 1;
    if (r == 1) return x - 1;
    return x;
  };
  std::vector<int> w(m);
  for (int j = 1; j <= m; ++j) w[j - 1] = static_cast<int>(s(window_[j - 1]));
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::mult_right_s(int i) const {
  const int m = period();
  if (i < 1 || i > m) throw std::invalid_argument("mult_right_s: bad index");
  auto s = [&](long long x) {
    const long long r = ((x - i) % m + m) % m;
    if (r == 0) return x + 1;
    if (r == 1) return x - 1;
    return x;
  };
  std::vector<int> w(m);
  for (int j = 1; j <= m; ++j) w[j - 1] = static_cast<int>(apply(s(j)));
  return AffinePermutation(std::move(w));
}

AffinePermutation from_window(std::vector<int> values) {
  return AffinePermutation(std::move(values));
}

long long length(const AffinePermutation& g) {
  // l(g) = sum over window positions i < j of |floor((g(j) - g(i)) / 2n)|.
  const int m = g.period();
  const auto& w = g.window();
  long long len = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      long long f = floor_div(w[j] - w[i], m);
      len += f < 0 ? -f : f;
    }
  return len;
}

DescentSet descents(const AffinePermutation& g, Side side) {
  const AffinePermutation h = side == Side::Right ? g : g.inverse();
  DescentSet d{side, {}};
  for (int i = 1; i <= h.period(); ++i)
    if (h.apply(i) > h.apply(i + 1)) d.members.push_back(i);
  return d;
}

namespace {

// #{a <= i : g(a) >= j}, computed per residue class.
long long dominance_count(const AffinePermutation& g, int i, long long j) {
  const int m = g.period();
  long long total = 0;
  for (int r = 1; r <= m; ++r) {
    // a = r + m k: a <= i gives k <= floor((i-r)/m); g(a) = g(r) + m k >= j
    // gives k >= ceil((j - g(r))/m).
    const long long hi = floor_div(i - r, m);
    const long long lo = ceil_div(j - g.window()[r - 1], m);
    if (hi >= lo) total += hi - lo + 1;
  }
  return total;
}

}  // namespace

bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w) {
  if (u.period() != w.period())
    throw std::invalid_argument("bruhat_leq: mismatched periods");
  if (u.shift_sum() != w.shift_sum()) return false;
  const int m = u.period();
  const auto [ulo, uhi] = std::minmax_element(u.window().begin(), u.window().end());
  const auto [wlo, whi] = std::minmax_element(w.window().begin(), w.window().end());
  const long long jlo = std::min(*ulo, *wlo) - m;
  const long long jhi = std::max(*uhi, *whi) + m;
  for (int i = 1; i <= m; ++i)
    for (long long j = jlo; j <= jhi; ++j)
      if (dominance_count(u, i, j) > dominance_count(w, i, j)) return false;
  return true;
}

AffinePermutation embed(const Matching& tau) {
  const int m = tau.points();
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) {
    const int p = tau.partner(i);
    w[i - 1] = p > i ? p : p + m;
  }
  return AffinePermutation(std::move(w));
}

Matching matching_of_window(const AffinePermutation& g) {
  const int m = g.period();
  std::vector<int> partner(m);
  for (int i = 1; i <= m; ++i)
    partner[i - 1] = static_cast<int>(((g.apply(i) - 1) % m + m) % m) + 1;
  return Matching(std::move(partner));
}

AffinePermutation conj_simple(const AffinePermutation& g, int i) {
  return g.mult_left_s(i).mult_right_s(i);
}

}  // namespace uncross
