#include "uncross/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uncross {

namespace {

int wrap(int i, int m) { return (i - 1) % m + 1; }  // 1..m, i >= 1

}  // namespace

Matching::Matching(std::vector<int> partner) : partner_(std::move(partner)) {
  const int m = static_cast<int>(partner_.size());
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("matching: need an even number of points, got " +
                                std::to_string(m));
  for (int i = 1; i <= m; ++i) {
    const int j = partner_[i - 1];
    if (j < 1 || j > m)
      throw std::invalid_argument("matching: partner[" + std::to_string(i) +
                                  "]=" + std::to_string(j) + " out of range");
    if (j == i)
      throw std::invalid_argument("matching: fixed point at " + std::to_string(i));
    if (partner_[j - 1] != i)
      throw std::invalid_argument("matching: not an involution at " + std::to_string(i));
  }
}

Chord Matching::chord_through(int i) const {
  const int j = partner(i);
  return {std::min(i, j), std::max(i, j)};
}

std::vector<Chord> Matching::chords() const {
  std::vector<Chord> out;
  out.reserve(n());
  for (int i = 1; i <= points(); ++i)
    if (partner(i) > i) out.push_back({i, partner(i)});
  return out;
}

Matching make_matching(std::vector<int> partners) { return Matching(std::move(partners)); }

Matching top_matching(int n) {
  std::vector<int> p(2 * n);
  for (int i = 1; i <= 2 * n; ++i) p[i - 1] = i <= n ? i + n : i - n;
  return Matching(std::move(p));
}

namespace {

void enumerate_rec(std::vector<int>& partner, int m, std::vector<Matching>& out) {
  int i = 0;
  while (i < m && partner[i] != 0) ++i;
  if (i == m) {
    out.emplace_back(partner);
    return;
  }
  for (int j = i + 1; j < m; ++j) {
    if (partner[j] != 0) continue;
    partner[i] = j + 1;
    partner[j] = i + 1;
    enumerate_rec(partner, m, out);
    partner[i] = partner[j] = 0;
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_matchings: n must be >= 1");
  std::vector<Matching> out;
  std::vector<int> partner(2 * n, 0);
  enumerate_rec(partner, 2 * n, out);
  // Pairing the smallest open point with ascending partners yields the
  // partner sequences in lexicographic order already; assert, don't re-sort.
  return out;
}

bool interleaves(Chord a, Chord b) {
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second)
    throw std::invalid_argument("interleaves: chords share an endpoint");
  const bool b1 = a.first < b.first && b.first < a.second;
  const bool b2 = a.first < b.second && b.second < a.second;
  return b1 != b2;
}

int crossing_number(const Matching& m) {
  const auto cs = m.chords();
  int c = 0;
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (interleaves(cs[i], cs[j])) ++c;
  return c;
}

std::vector<ChordPair> crossing_pairs(const Matching& m) {
  const auto cs = m.chords();
  std::vector<ChordPair> out;
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (interleaves(cs[i], cs[j])) out.push_back({cs[i], cs[j]});
  return out;
}

BoundaryClass abc_class(const Matching& m, int i) {
  const int p = m.points();
  if (i < 1 || i > p) throw std::invalid_argument("abc_class: index out of range");
  const int j = wrap(i + 1, p);
  if (m.partner(i) == j) return BoundaryClass::C;
  return interleaves(m.chord_through(i), m.chord_through(j)) ? BoundaryClass::B
                                                             : BoundaryClass::A;
}

Matching simple_act(const Matching& m, int i) {
  const int p = m.points();
  if (i < 1 || i > p) throw std::invalid_argument("simple_act: index out of range");
  const int a = i, b = wrap(i + 1, p);
  auto s = [&](int x) { return x == a ? b : x == b ? a : x; };
  std::vector<int> q(p);
  for (int x = 1; x <= p; ++x) q[x - 1] = s(m.partner(s(x)));
  return Matching(std::move(q));
}

std::pair<Matching, Matching> resolutions(const Matching& m, const ChordPair& pair) {
  auto on_chord = [&](Chord c) { return m.chord_through(c.first) == c; };
  if (!on_chord(pair.first) || !on_chord(pair.second))
    throw std::invalid_argument("resolutions: chords do not belong to the matching");
  if (!interleaves(pair.first, pair.second))
    throw std::invalid_argument("resolutions: chords do not cross");
  int e[4] = {pair.first.first, pair.first.second, pair.second.first, pair.second.second};
  std::sort(e, e + 4);
  auto repaired = [&](int p0, int p1, int p2, int p3) {
    std::vector<int> q = m.partners();
    q[e[p0] - 1] = e[p1];
    q[e[p1] - 1] = e[p0];
    q[e[p2] - 1] = e[p3];
    q[e[p3] - 1] = e[p2];
    return Matching(std::move(q));
  };
  return {repaired(0, 1, 2, 3), repaired(0, 3, 1, 2)};
}

std::vector<Matching> covers_down(const Matching& m) {
  const int c = crossing_number(m);
  std::vector<Matching> out;
  for (const auto& pr : crossing_pairs(m)) {
    auto [r0, r1] = resolutions(m, pr);
    if (crossing_number(r0) == c - 1) out.push_back(r0);
    if (crossing_number(r1) == c - 1) out.push_back(r1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Matching> covers_up(const Matching& m) {
  const int c = crossing_number(m);
  const auto cs = m.chords();
  std::vector<Matching> out;
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      if (interleaves(cs[i], cs[j])) continue;
      // The unique crossing re-pairing of four points a<b<c<d is {(a,c),(b,d)}.
      int e[4] = {cs[i].first, cs[i].second, cs[j].first, cs[j].second};
      std::sort(e, e + 4);
      std::vector<int> q = m.partners();
      q[e[0] - 1] = e[2];
      q[e[2] - 1] = e[0];
      q[e[1] - 1] = e[3];
      q[e[3] - 1] = e[1];
      Matching eta(std::move(q));
      if (crossing_number(eta) == c + 1) out.push_back(std::move(eta));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace uncross
