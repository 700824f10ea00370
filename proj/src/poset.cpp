#include "uncross/poset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

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

std::string id_str(const GradedPoset& P, int id) {
  if (P.is_bottom(id)) return "bot";
  const int off = P.has_bottom() ? 1 : 0;
  if (id - off >= static_cast<int>(P.matchings().size()))
    return std::to_string(id);  // synthetic poset without matching payloads
  std::string s = "[";
  const auto& p = P.matching_of(id).partners();
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace

GradedPoset GradedPoset::build(int n, bool includeBottom) {
  if (n < 1) throw std::invalid_argument("poset build: n must be >= 1");
  GradedPoset P;
  P.n_ = n;
  P.has_bottom_ = includeBottom;
  P.matchings_ = enumerate_matchings(n);
  const int off = includeBottom ? 1 : 0;
  const int N = static_cast<int>(P.matchings_.size()) + off;
  for (int k = 0; k < static_cast<int>(P.matchings_.size()); ++k)
    P.index_[P.matchings_[k].partners()] = k;
  P.rank_.assign(N, 0);
  if (includeBottom) P.rank_[0] = -1;
  for (int k = 0; k < static_cast<int>(P.matchings_.size()); ++k)
    P.rank_[k + off] = crossing_number(P.matchings_[k]);
  for (int k = 0; k < static_cast<int>(P.matchings_.size()); ++k) {
    const int upper = k + off;
    for (const Matching& lo : covers_down(P.matchings_[k])) {
      const int lower = P.id_of(lo);
      if (lower < 0) throw std::logic_error("poset build: cover outside universe");
      if (P.rank_[lower] != P.rank_[upper] - 1)
        throw std::logic_error("poset build: cover does not raise rank by 1");
      P.covers_.push_back({lower, upper});
    }
    if (includeBottom && P.rank_[upper] == 0) P.covers_.push_back({0, upper});
  }
  std::sort(P.covers_.begin(), P.covers_.end());
  P.finalize_();
  return P;
}

GradedPoset GradedPoset::from_covers(std::vector<int> ranks,
                                     std::vector<std::pair<int, int>> covers) {
  GradedPoset P;
  P.rank_ = std::move(ranks);
  P.covers_ = std::move(covers);
  const int N = static_cast<int>(P.rank_.size());
  for (auto [l, u] : P.covers_) {
    if (l < 0 || u < 0 || l >= N || u >= N)
      throw std::invalid_argument("from_covers: id out of range");
    if (P.rank_[u] != P.rank_[l] + 1)
      throw std::invalid_argument("from_covers: cover must raise rank by 1");
  }
  std::sort(P.covers_.begin(), P.covers_.end());
  P.finalize_();
  return P;
}

void GradedPoset::finalize_() {
  const int N = size();
  max_rank_ = 0;
  for (int r : rank_) max_rank_ = std::max(max_rank_, r);
  up_adj_.assign(N, {});
  down_adj_.assign(N, {});
  for (auto [l, u] : covers_) {
    up_adj_[l].push_back(u);
    down_adj_[u].push_back(l);
  }
  // Reflexive-transitive closure, one rank layer at a time.
  std::vector<int> by_rank(N);
  for (int i = 0; i < N; ++i) by_rank[i] = i;
  std::stable_sort(by_rank.begin(), by_rank.end(),
                   [&](int a, int b) { return rank_[a] < rank_[b]; });
  down_.assign(N, Bitset(N));
  up_.assign(N, Bitset(N));
  for (int id : by_rank) {
    down_[id].set(id);
    for (int lo : down_adj_[id]) down_[id] |= down_[lo];
  }
  for (auto it = by_rank.rbegin(); it != by_rank.rend(); ++it) {
    up_[*it].set(*it);
    for (int hi : up_adj_[*it]) up_[*it] |= up_[hi];
  }
  odd_mask_ = Bitset(N);
  for (int i = 0; i < N; ++i)
    if (((rank_[i] % 2) + 2) % 2 == 1) odd_mask_.set(i);
}

const Matching& GradedPoset::matching_of(int id) const {
  if (is_bottom(id)) throw std::invalid_argument("matching_of: bottom has no matching");
  const int off = has_bottom_ ? 1 : 0;
  if (id - off < 0 || id - off >= static_cast<int>(matchings_.size()))
    throw std::invalid_argument("matching_of: bad id " + std::to_string(id));
  return matchings_[id - off];
}

int GradedPoset::id_of(const Matching& m) const {
  auto it = index_.find(m.partners());
  if (it == index_.end()) return -1;
  return it->second + (has_bottom_ ? 1 : 0);
}

std::vector<int> GradedPoset::interval(int x, int y) const {
  if (!leq(x, y)) throw std::invalid_argument("interval: elements are incomparable");
  std::vector<int> out;
  for_each_and(up_[x], down_[y], [&](int z) { out.push_back(z); });
  return out;
}

Bitset GradedPoset::interval_bits(int x, int y) const {
  if (!leq(x, y)) throw std::invalid_argument("interval: elements are incomparable");
  return and_of(up_[x], down_[y]);
}

std::vector<int> GradedPoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_adj_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> GradedPoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_adj_[i].empty()) out.push_back(i);
  return out;
}

long long GradedPoset::chi(const std::vector<int>& ids) const {
  long long s = 0;
  for (int id : ids) s += (((rank_[id] % 2) + 2) % 2 == 1) ? -1 : 1;
  return s;
}

long long GradedPoset::chi_interval(int x, int y) const {
  if (!leq(x, y)) throw std::invalid_argument("chi_interval: incomparable");
  const int total = count_and(up_[x], down_[y]);
  const int odd = count_and3(up_[x], down_[y], odd_mask_);
  return static_cast<long long>(total - odd) - odd;
}

long long GradedPoset::chi_interval_naive(int x, int y) const {
  if (!leq(x, y)) throw std::invalid_argument("chi_interval_naive: incomparable");
  // Walk up the cover graph from x, keeping elements below y.
  std::vector<char> seen(size(), 0);
  std::deque<int> q{x};
  seen[x] = 1;
  long long s = 0;
  while (!q.empty()) {
    int z = q.front();
    q.pop_front();
    s += (((rank_[z] % 2) + 2) % 2 == 1) ? -1 : 1;
    for (int w : up_adj_[z])
      if (!seen[w] && leq(w, y)) {
        seen[w] = 1;
        q.push_back(w);
      }
  }
  return s;
}

long long GradedPoset::mobius(int x, int y) const {
  if (!leq(x, y)) throw std::invalid_argument("mobius: incomparable");
  return mobius_column(y)[x];
}

std::vector<long long> GradedPoset::mobius_column(int y) const {
  std::vector<long long> mu(size(), 0);
  // Elements below y, processed from y downwards by rank.
  std::vector<int> elems;
  down_[y].for_each([&](int x) { elems.push_back(x); });
  std::stable_sort(elems.begin(), elems.end(),
                   [&](int a, int b) { return rank_[a] > rank_[b]; });
  mu[y] = 1;
  for (int x : elems) {
    if (x == y) continue;
    long long s = 0;
    for_each_and(up_[x], down_[y], [&](int z) {
      if (z != x) s += mu[z];
    });
    mu[x] = -s;
  }
  return mu;
}

CheckReport GradedPoset::is_eulerian(int jobs) const {
  CheckReport rep;
  rep.name = "eulerian";
  rep.universe = "all comparable pairs x < y (mobius route)";
  if (minimal_elements().size() != 1 || maximal_elements().size() != 1)
    throw std::invalid_argument("is_eulerian: poset must be bounded");
  const int N = size();
  std::vector<std::vector<std::string>> viol(N);
  std::vector<long long> cases(N, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(jobs))
#endif
  for (int y = 0; y < N; ++y) {
    const auto mu = mobius_column(y);
    down_[y].for_each([&](int x) {
      if (x == y) return;
      ++cases[y];
      const long long expect = ((rank_[y] - rank_[x]) % 2 == 0) ? 1 : -1;
      if (mu[x] != expect)
        viol[y].push_back("mu(" + id_str(*this, x) + "," + id_str(*this, y) +
                          ")=" + std::to_string(mu[x]) + " expected " +
                          std::to_string(expect));
    });
  }
  for (int y = 0; y < N; ++y) {
    rep.casesChecked += cases[y];
    for (auto& v : viol[y]) rep.violations.push_back(std::move(v));
  }
  return rep;
}

CheckReport GradedPoset::is_eulerian_by_counting() const {
  CheckReport rep;
  rep.name = "eulerian-by-counting";
  rep.universe = "all comparable pairs x < y (parity-count route)";
  const int N = size();
  for (int y = 0; y < N; ++y)
    down_[y].for_each([&](int x) {
      if (x == y) return;
      ++rep.casesChecked;
      const int total = count_and(up_[x], down_[y]);
      const int odd = count_and3(up_[x], down_[y], odd_mask_);
      if (total != 2 * odd)
        rep.violations.push_back("interval [" + id_str(*this, x) + "," +
                                 id_str(*this, y) + "] has " + std::to_string(odd) +
                                 " odd vs " + std::to_string(total - odd) + " even");
    });
  return rep;
}

CheckReport GradedPoset::is_thin() const {
  CheckReport rep;
  rep.name = "thin";
  rep.universe = "all intervals of length two";
  const int N = size();
  for (int y = 0; y < N; ++y)
    down_[y].for_each([&](int x) {
      if (rank_[y] - rank_[x] != 2) return;
      ++rep.casesChecked;
      const int middles = count_and(up_[x], down_[y]) - 2;
      if (middles != 2)
        rep.violations.push_back("interval [" + id_str(*this, x) + "," +
                                 id_str(*this, y) + "] has " +
                                 std::to_string(middles) + " middle elements");
    });
  return rep;
}

CheckReport GradedPoset::chi_all_intervals(int jobs) const {
  CheckReport rep;
  rep.name = "chi-intervals";
  rep.universe = "all comparable pairs x < y";
  const int N = size();
  std::vector<std::vector<std::string>> viol(N);
  std::vector<long long> cases(N, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(jobs))
#endif
  for (int y = 0; y < N; ++y) {
    down_[y].for_each([&](int x) {
      if (x == y) return;
      ++cases[y];
      const int total = count_and(up_[x], down_[y]);
      const int odd = count_and3(up_[x], down_[y], odd_mask_);
      const long long chi = static_cast<long long>(total) - 2 * odd;
      if (chi != 0)
        viol[y].push_back("chi([" + id_str(*this, x) + "," + id_str(*this, y) +
                          "])=" + std::to_string(chi));
    });
  }
  for (int y = 0; y < N; ++y) {
    rep.casesChecked += cases[y];
    for (auto& v : viol[y]) rep.violations.push_back(std::move(v));
  }
  return rep;
}

}  // namespace uncross
