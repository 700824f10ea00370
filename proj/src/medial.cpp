#include "uncross/medial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace uncross {

// ---------------------------------------------------------------------------
// Mutable half-edge soup used while building and rewriting. Entries marked
// dead are dropped by finalize_(), which renumbers everything canonically.
struct MedialRawMap {
  int n = 0;
  int free_loops = 0;
  std::vector<int> twin, next, vert;  // -1 = dead half-edge
  std::vector<int> vlabel;            // per vertex: 1..2n stub label, 0 internal, -1 dead
  std::vector<int> stub_half;         // label-1 -> half-edge id

  int new_vertex(int label) {
    vlabel.push_back(label);
    return static_cast<int>(vlabel.size()) - 1;
  }
  int new_half(int v) {
    twin.push_back(-1);
    next.push_back(-1);
    vert.push_back(v);
    return static_cast<int>(twin.size()) - 1;
  }
  void kill_half(int h) { twin[h] = next[h] = vert[h] = -1; }
  void kill_vertex(int v) { vlabel[v] = -1; }
  bool alive(int h) const { return h >= 0 && twin[h] >= 0; }
};

namespace {

using RawMap = MedialRawMap;

// Exact ccw-angle comparator for integer direction vectors, angles measured
// from the positive x-axis.
bool dir_less(const std::pair<long long, long long>& a,
              const std::pair<long long, long long>& b) {
  auto half = [](const std::pair<long long, long long>& d) {
    return d.second < 0 || (d.second == 0 && d.first < 0) ? 1 : 0;
  };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  const __int128 cr = (__int128)a.first * b.second - (__int128)a.second * b.first;
  return cr > 0;
}

bool frac_less(long long an, long long ad, long long bn, long long bd) {
  return (__int128)an * bd < (__int128)bn * ad;  // denominators positive
}
bool frac_eq(long long an, long long ad, long long bn, long long bd) {
  return (__int128)an * bd == (__int128)bn * ad;
}

std::vector<int> bfs_order(const RawMap& r, const std::vector<int>& seeds,
                           std::vector<char>& seen) {
  std::vector<int> order;
  std::deque<int> q;
  for (int s : seeds)
    if (!seen[s]) {
      seen[s] = 1;
      q.push_back(s);
    }
  while (!q.empty()) {
    int h = q.front();
    q.pop_front();
    order.push_back(h);
    for (int nb : {r.twin[h], r.next[h]})
      if (nb >= 0 && !seen[nb]) {
        seen[nb] = 1;
        q.push_back(nb);
      }
  }
  return order;
}

std::vector<int> component_encoding(const RawMap& r, int seed, std::vector<int>* out_order) {
  std::vector<char> seen(r.twin.size(), 0);
  for (size_t h = 0; h < r.twin.size(); ++h)
    if (!r.alive(static_cast<int>(h))) seen[h] = 1;
  std::vector<int> order = bfs_order(r, {seed}, seen);
  std::vector<int> local(r.twin.size(), -1);
  for (size_t k = 0; k < order.size(); ++k) local[order[k]] = static_cast<int>(k);
  std::vector<int> enc;
  enc.reserve(order.size() * 2);
  for (int h : order) {
    enc.push_back(local[r.twin[h]]);
    enc.push_back(local[r.next[h]]);
  }
  if (out_order) *out_order = std::move(order);
  return enc;
}

}  // namespace

// Canonical compaction: half-edges reachable from the boundary are numbered
// by breadth-first search seeded with the stub rays in label order; each
// leftover component is numbered from the seed minimizing its encoding, so
// equal maps produce equal arrays regardless of history.
MedialGraph MedialGraph::finalize_(MedialRawMap&& r) {
  std::vector<char> seen(r.twin.size(), 0);
  for (size_t h = 0; h < r.twin.size(); ++h)
    if (!r.alive(static_cast<int>(h))) seen[h] = 1;
  std::vector<int> order = bfs_order(r, r.stub_half, seen);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> comps;  // (encoding, order)
  for (size_t h0 = 0; h0 < r.twin.size(); ++h0) {
    if (seen[h0]) continue;
    std::vector<char> cseen(seen);
    std::vector<int> members = bfs_order(r, {static_cast<int>(h0)}, cseen);
    std::vector<int> best_enc, best_order;
    for (int s : members) {
      std::vector<int> ord;
      std::vector<int> enc = component_encoding(r, s, &ord);
      if (best_enc.empty() || enc < best_enc) {
        best_enc = std::move(enc);
        best_order = std::move(ord);
      }
    }
    for (int h : best_order) seen[h] = 1;
    comps.push_back({std::move(best_enc), std::move(best_order)});
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& c : comps) order.insert(order.end(), c.second.begin(), c.second.end());

  std::vector<int> newid(r.twin.size(), -1);
  for (size_t k = 0; k < order.size(); ++k) newid[order[k]] = static_cast<int>(k);

  MedialGraph g;
  g.n_ = r.n;
  g.free_loops_ = r.free_loops;
  const int H = static_cast<int>(order.size());
  g.twin_.resize(H);
  g.next_.resize(H);
  g.vert_.resize(H);
  std::vector<int> vmap(r.vlabel.size(), -1);
  int vcount = 2 * r.n;
  g.vlabel_.assign(vcount, 0);
  g.stub_half_.assign(2 * r.n, -1);
  for (int l = 1; l <= 2 * r.n; ++l) {
    const int ov = r.vert[r.stub_half[l - 1]];
    vmap[ov] = l - 1;
    g.vlabel_[l - 1] = l;
    g.stub_half_[l - 1] = newid[r.stub_half[l - 1]];
  }
  for (int h : order) {
    const int ov = r.vert[h];
    if (vmap[ov] < 0) {
      vmap[ov] = vcount++;
      g.vlabel_.push_back(0);
    }
  }
  for (int h : order) {
    g.twin_[newid[h]] = newid[r.twin[h]];
    g.next_[newid[h]] = newid[r.next[h]];
    g.vert_[newid[h]] = vmap[r.vert[h]];
  }
  g.vfirst_.assign(vcount, -1);
  for (int h = 0; h < H; ++h)
    if (g.vfirst_[g.vert_[h]] < 0) g.vfirst_[g.vert_[h]] = h;
  return g;
}

namespace {

RawMap to_raw(const MedialGraph& g) {
  RawMap r;
  r.n = g.n();
  r.free_loops = g.free_loops();
  const int H = g.num_half_edges();
  r.twin.resize(H);
  r.next.resize(H);
  r.vert.resize(H);
  for (int h = 0; h < H; ++h) {
    r.twin[h] = g.twin(h);
    r.next[h] = g.next(h);
    r.vert[h] = g.vertex(h);
  }
  r.vlabel.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    r.vlabel[v] = g.is_stub(v) ? g.stub_label(v) : 0;
  r.stub_half.resize(2 * g.n());
  for (int l = 1; l <= 2 * g.n(); ++l) r.stub_half[l - 1] = g.stub_half(l);
  return r;
}

}  // namespace

MedialGraph MedialGraph::from_arrays(int n, std::vector<int> twin, std::vector<int> next,
                                     std::vector<int> vertex_of,
                                     std::vector<int> stub_vertex, int free_loops) {
  if (static_cast<int>(stub_vertex.size()) != 2 * n)
    throw std::invalid_argument("from_arrays: need 2n stub vertices");
  RawMap r;
  r.n = n;
  r.free_loops = free_loops;
  r.twin = std::move(twin);
  r.next = std::move(next);
  r.vert = std::move(vertex_of);
  int nv = 0;
  for (int v : r.vert) nv = std::max(nv, v + 1);
  r.vlabel.assign(nv, 0);
  r.stub_half.assign(2 * n, -1);
  for (int l = 1; l <= 2 * n; ++l) {
    r.vlabel[stub_vertex[l - 1]] = l;
    for (size_t h = 0; h < r.vert.size(); ++h)
      if (r.vert[h] == stub_vertex[l - 1]) r.stub_half[l - 1] = static_cast<int>(h);
    if (r.stub_half[l - 1] < 0) throw std::invalid_argument("from_arrays: stub without ray");
  }
  MedialGraph g = finalize_(std::move(r));
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// Construction from a matching.

MedialGraph MedialGraph::from_matching(const Matching& tau) {
  const int m = tau.points();
  const auto chords = tau.chords();
  const int nc = static_cast<int>(chords.size());

  for (int attempt = 0; attempt < 64; ++attempt) {
    // Boundary points on a convex arc; integer coordinates keep everything
    // exact. The offset term breaks regularities that create triple points.
    std::vector<long long> X(m + 1), Y(m + 1);
    for (int k = 1; k <= m; ++k) {
      X[k] = (long long)k * (m + 2) + ((long long)k * (attempt + 1)) % (m + 1);
      Y[k] = X[k] * X[k];
    }
    struct Crossing {
      long long tn, td;  // parameter along this chord, td > 0
      int other;
    };
    std::vector<std::vector<Crossing>> along(nc);
    bool degenerate = false;
    for (int i = 0; i < nc && !degenerate; ++i) {
      for (int j = i + 1; j < nc; ++j) {
        if (!interleaves(chords[i], chords[j])) continue;
        const long long ax = X[chords[i].first], ay = Y[chords[i].first];
        const long long cx = X[chords[j].first], cy = Y[chords[j].first];
        const long long rx = X[chords[i].second] - ax, ry = Y[chords[i].second] - ay;
        const long long sx = X[chords[j].second] - cx, sy = Y[chords[j].second] - cy;
        const long long den = rx * sy - ry * sx;
        if (den == 0) {
          degenerate = true;
          break;
        }
        const long long ti_n = (cx - ax) * sy - (cy - ay) * sx;  // over den
        const long long tj_n = (cx - ax) * ry - (cy - ay) * rx;  // over den
        auto norm = [](long long nn, long long dd) {
          return dd > 0 ? std::pair<long long, long long>{nn, dd}
                        : std::pair<long long, long long>{-nn, -dd};
        };
        const auto ti = norm(ti_n, den);
        const auto tj = norm(tj_n, den);
        along[i].push_back({ti.first, ti.second, j});
        along[j].push_back({tj.first, tj.second, i});
      }
    }
    if (degenerate) continue;
    for (int i = 0; i < nc && !degenerate; ++i) {
      std::sort(along[i].begin(), along[i].end(), [](const Crossing& a, const Crossing& b) {
        return frac_less(a.tn, a.td, b.tn, b.td);
      });
      for (size_t k = 1; k < along[i].size(); ++k)
        if (frac_eq(along[i][k - 1].tn, along[i][k - 1].td, along[i][k].tn, along[i][k].td))
          degenerate = true;  // three chords through one point
    }
    if (degenerate) continue;

    RawMap r;
    r.n = m / 2;
    for (int l = 1; l <= m; ++l) r.new_vertex(l);
    std::map<std::pair<int, int>, int> cross_vertex;
    for (int i = 0; i < nc; ++i)
      for (const auto& c : along[i]) {
        const auto key = std::minmax(i, c.other);
        if (!cross_vertex.count(key)) cross_vertex[key] = r.new_vertex(0);
      }
    std::vector<std::vector<std::pair<std::pair<long long, long long>, int>>> cross_rays(
        r.vlabel.size());
    r.stub_half.assign(m, -1);
    for (int i = 0; i < nc; ++i) {
      const long long dxv = X[chords[i].second] - X[chords[i].first];
      const long long dyv = Y[chords[i].second] - Y[chords[i].first];
      std::vector<int> nodes{chords[i].first - 1};
      for (const auto& c : along[i]) nodes.push_back(cross_vertex[std::minmax(i, c.other)]);
      nodes.push_back(chords[i].second - 1);
      for (size_t k = 0; k + 1 < nodes.size(); ++k) {
        const int u = nodes[k], v = nodes[k + 1];
        const int hu = r.new_half(u);
        const int hv = r.new_half(v);
        r.twin[hu] = hv;
        r.twin[hv] = hu;
        if (r.vlabel[u] > 0) {
          r.next[hu] = hu;
          r.stub_half[r.vlabel[u] - 1] = hu;
        } else {
          cross_rays[u].push_back({{dxv, dyv}, hu});
        }
        if (r.vlabel[v] > 0) {
          r.next[hv] = hv;
          r.stub_half[r.vlabel[v] - 1] = hv;
        } else {
          cross_rays[v].push_back({{-dxv, -dyv}, hv});
        }
      }
    }
    for (size_t v = 0; v < r.vlabel.size(); ++v) {
      auto& rr = cross_rays[v];
      if (rr.empty()) continue;
      if (rr.size() != 4) throw std::logic_error("from_matching: crossing degree != 4");
      std::sort(rr.begin(), rr.end(),
                [](const auto& a, const auto& b) { return dir_less(a.first, b.first); });
      for (int k = 0; k < 4; ++k) r.next[rr[k].second] = rr[(k + 1) % 4].second;
    }
    MedialGraph g = finalize_(std::move(r));
    g.validate();
    return g;
  }
  throw std::logic_error("from_matching: no generic position found");
}

// ---------------------------------------------------------------------------
// Queries.

int MedialGraph::crossings() const {
  int c = 0;
  for (int v = 0; v < num_vertices(); ++v)
    if (!is_stub(v)) ++c;
  return c;
}

std::vector<int> MedialGraph::internal_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (!is_stub(v)) out.push_back(v);
  return out;
}

std::array<int, 4> MedialGraph::rays(int v) const {
  if (is_stub(v)) throw std::invalid_argument("rays: boundary stub");
  std::array<int, 4> r;
  r[0] = vfirst_[v];
  for (int k = 1; k < 4; ++k) r[k] = next_[r[k - 1]];
  return r;
}

std::vector<int> MedialGraph::face_orbit(int h) const {
  std::vector<int> orbit;
  int cur = h;
  do {
    orbit.push_back(cur);
    cur = twin_[next_[cur]];
  } while (cur != h);
  const auto mn = std::min_element(orbit.begin(), orbit.end());
  std::rotate(orbit.begin(), mn, orbit.end());
  return orbit;
}

std::vector<Face> MedialGraph::faces() const {
  std::vector<Face> out;
  std::vector<char> seen(num_half_edges(), 0);
  for (int h = 0; h < num_half_edges(); ++h) {
    if (seen[h]) continue;
    Face f;
    f.half_edges = face_orbit(h);
    f.internal = true;
    for (int x : f.half_edges) {
      seen[x] = 1;
      if (is_stub(vert_[x])) f.internal = false;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Strand> MedialGraph::strands() const {
  std::vector<Strand> out;
  std::vector<char> edge_used(num_half_edges(), 0);
  auto use = [&](int h) { edge_used[h] = edge_used[twin_[h]] = 1; };
  auto trace = [&](int start) {
    Strand s;
    int cur = start;
    while (true) {
      s.half_edges.push_back(cur);
      use(cur);
      const int t = twin_[cur];
      const int v = vert_[t];
      if (is_stub(v)) {
        s.end_b = stub_label(v);
        break;
      }
      s.vertices.push_back(v);
      cur = next_[next_[t]];
      if (cur == start) {
        s.closed = true;
        break;
      }
    }
    return s;
  };
  for (int l = 1; l <= 2 * n_; ++l) {
    const int h = stub_half_[l - 1];
    if (edge_used[h]) continue;
    Strand s = trace(h);
    s.end_a = l;
    out.push_back(std::move(s));
  }
  for (int h = 0; h < num_half_edges(); ++h) {
    if (edge_used[h] || is_stub(vert_[h])) continue;
    Strand s = trace(h);
    s.closed = true;
    out.push_back(std::move(s));
  }
  for (int k = 0; k < free_loops_; ++k) out.push_back(Strand{true, 0, 0, {}, {}});
  return out;
}

bool MedialGraph::is_lensless() const {
  if (free_loops_ > 0) return false;
  const auto ss = strands();
  std::vector<std::array<int, 2>> owner(num_vertices(), {-1, -1});
  for (size_t si = 0; si < ss.size(); ++si) {
    if (ss[si].closed) return false;
    for (size_t k = 0; k < ss[si].vertices.size(); ++k) {
      const int v = ss[si].vertices[k];
      const int arrival = twin_[ss[si].half_edges[k]];
      const auto rr = rays(v);
      int pos = 0;
      while (rr[pos] != arrival) ++pos;
      owner[v][pos % 2] = static_cast<int>(si);
    }
  }
  std::set<std::pair<int, int>> met;
  for (int v = 0; v < num_vertices(); ++v) {
    if (is_stub(v)) continue;
    const int a = owner[v][0], b = owner[v][1];
    if (a == b) return false;  // a strand crossing itself
    if (!met.insert(std::minmax(a, b)).second) return false;  // a lens
  }
  return true;
}

int MedialGraph::crossing_of(int label_a, int label_b) const {
  auto walk = [&](int label) {
    std::vector<int> vs;
    int cur = stub_half_[label - 1];
    while (true) {
      const int t = twin_[cur];
      if (is_stub(vert_[t])) break;
      vs.push_back(vert_[t]);
      cur = next_[next_[t]];
    }
    return vs;
  };
  const auto va = walk(label_a);
  const auto vb = walk(label_b);
  const std::set<int> sb(vb.begin(), vb.end());
  for (int v : va)
    if (sb.count(v)) return v;
  return -1;
}

// ---------------------------------------------------------------------------
// Crossing resolution.

MedialGraph MedialGraph::resolve_crossing(int v, int dir) const {
  return resolve_crossings({{v, dir}});
}

MedialGraph MedialGraph::resolve_crossings(
    const std::vector<std::pair<int, int>>& sites) const {
  RawMap r = to_raw(*this);
  std::vector<int> conn(r.twin.size(), -1);
  std::vector<char> in_set(r.twin.size(), 0);
  for (auto [v, dir] : sites) {
    if (v < 0 || v >= num_vertices() || is_stub(v))
      throw std::invalid_argument("resolve_crossing: not an internal vertex");
    if (dir != 0 && dir != 1)
      throw std::invalid_argument("resolve_crossing: dir must be 0 or 1");
    const auto rr = rays(v);
    if (in_set[rr[0]]) throw std::invalid_argument("resolve_crossing: duplicate vertex");
    conn[rr[(0 + dir) % 4]] = rr[(1 + dir) % 4];
    conn[rr[(1 + dir) % 4]] = rr[(0 + dir) % 4];
    conn[rr[(2 + dir) % 4]] = rr[(3 + dir) % 4];
    conn[rr[(3 + dir) % 4]] = rr[(2 + dir) % 4];
    for (int x : rr) in_set[x] = 1;
    r.kill_vertex(v);
  }
  std::vector<char> consumed(r.twin.size(), 0);
  // A chain of smoothing arcs that reaches external edges splices them.
  for (size_t a = 0; a < r.twin.size(); ++a) {
    if (!in_set[a] || consumed[a] || in_set[r.twin[a]]) continue;
    const int ext0 = r.twin[a];
    int cur = static_cast<int>(a);
    while (true) {
      consumed[cur] = 1;
      const int b = conn[cur];
      consumed[b] = 1;
      const int t = r.twin[b];
      if (!in_set[t]) {
        r.twin[ext0] = t;
        r.twin[t] = ext0;
        break;
      }
      cur = t;
    }
  }
  // Leftover cycles are closed curves with no vertices on them.
  for (size_t a = 0; a < r.twin.size(); ++a) {
    if (!in_set[a] || consumed[a]) continue;
    int cur = static_cast<int>(a);
    while (!consumed[cur]) {
      consumed[cur] = 1;
      const int b = conn[cur];
      consumed[b] = 1;
      cur = r.twin[b];
    }
    ++r.free_loops;
  }
  for (size_t h = 0; h < r.twin.size(); ++h)
    if (in_set[h]) r.kill_half(static_cast<int>(h));
  MedialGraph g = finalize_(std::move(r));
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// Moves.

std::vector<Move> MedialGraph::applicable_moves() const {
  std::vector<Move> out;
  for (const Face& f : faces()) {
    if (!f.internal) continue;
    const auto& o = f.half_edges;
    if (o.size() == 1) {
      out.push_back({MoveKind::LoopRemoval, o[0]});
    } else if (o.size() == 2) {
      if (vert_[o[0]] != vert_[o[1]]) out.push_back({MoveKind::LensRemoval, o[0]});
    } else if (o.size() == 3) {
      if (vert_[o[0]] != vert_[o[1]] && vert_[o[1]] != vert_[o[2]] &&
          vert_[o[0]] != vert_[o[2]])
        out.push_back({MoveKind::YangBaxter, o[0]});
    }
  }
  return out;
}

MedialGraph MedialGraph::apply_move(const Move& m) const {
  if (m.face < 0 || m.face >= num_half_edges())
    throw std::invalid_argument("apply_move: bad face anchor");
  const auto orbit = face_orbit(m.face);
  RawMap r = to_raw(*this);

  // repl[k] replaces the old external ray ext[k]: link the new ray to the old
  // far end, mapping far ends that point back into the rewritten cluster onto
  // their own replacements.
  auto splice_external = [&](const std::vector<int>& repl, const std::vector<int>& ext) {
    for (size_t k = 0; k < ext.size(); ++k) {
      const int far = r.twin[ext[k]];
      const auto it = std::find(ext.begin(), ext.end(), far);
      if (it != ext.end()) {
        r.twin[repl[k]] = repl[it - ext.begin()];
      } else {
        r.twin[repl[k]] = far;
        r.twin[far] = repl[k];
      }
    }
  };

  if (m.kind == MoveKind::LoopRemoval) {
    if (orbit.size() != 1) throw std::invalid_argument("apply_move: not a monogon");
    const int h = orbit[0];
    const int v = vert_[h];
    if (is_stub(v)) throw std::invalid_argument("apply_move: monogon at a stub");
    const int th = twin_[h];  // the loop occupies adjacent rays h, twin(h)
    const int x = next_[th], y = next_[x];
    const int X = r.twin[x], Y = r.twin[y];
    if (X == y) {
      ++r.free_loops;  // the pass-through was itself a loop at v
    } else {
      r.twin[X] = Y;
      r.twin[Y] = X;
    }
    for (int z : {h, th, x, y}) r.kill_half(z);
    r.kill_vertex(v);
  } else if (m.kind == MoveKind::LensRemoval) {
    if (orbit.size() != 2) throw std::invalid_argument("apply_move: not a bigon");
    const int h1 = orbit[0], h2 = orbit[1];
    const int u = vert_[h1], v = vert_[h2];
    if (u == v || is_stub(u) || is_stub(v))
      throw std::invalid_argument("apply_move: bigon sides must sit on two crossings");
    const int n2 = next_[next_[h1]], n3 = next_[n2];
    const int m2 = next_[next_[h2]], m3 = next_[m2];
    const int w = r.new_vertex(0);
    std::vector<int> repl(4);
    for (int k = 0; k < 4; ++k) repl[k] = r.new_half(w);
    for (int k = 0; k < 4; ++k) r.next[repl[k]] = repl[(k + 1) % 4];
    // ccw rotation of the merged crossing; opposite rays are straight-through,
    // which re-pairs the strand ends across the merged crossing.
    splice_external(repl, {m3, n2, n3, m2});
    for (int z : {h1, next_[h1], h2, next_[h2], n2, n3, m2, m3}) r.kill_half(z);
    r.kill_vertex(u);
    r.kill_vertex(v);
  } else {
    if (orbit.size() != 3) throw std::invalid_argument("apply_move: not a triangle");
    const int h1 = orbit[0], h2 = orbit[1], h3 = orbit[2];
    const int A = vert_[h1], B = vert_[h2], C = vert_[h3];
    if (A == B || B == C || A == C || is_stub(A) || is_stub(B) || is_stub(C))
      throw std::invalid_argument("apply_move: triangle must span three crossings");
    auto nx2 = [&](int h) { return next_[next_[h]]; };
    auto nx3 = [&](int h) { return next_[next_[next_[h]]]; };
    // The six external rays in ccw order around the triangle. The move slides
    // the corner frame by one slot: new corners pair externals (e5,e0),
    // (e1,e2), (e3,e4).
    const std::vector<int> ext = {nx2(h1), nx3(h1), nx2(h3), nx3(h3), nx2(h2), nx3(h2)};
    std::array<int, 3> W, tnext, tprev;
    std::vector<int> repl(6, -1);
    for (int k = 0; k < 3; ++k) {
      W[k] = r.new_vertex(0);
      tnext[k] = r.new_half(W[k]);  // edge to the ccw-next corner
      tprev[k] = r.new_half(W[k]);  // edge to the ccw-previous corner
      const int ea = r.new_half(W[k]);
      const int eb = r.new_half(W[k]);
      repl[(2 * k + 5) % 6] = ea;
      repl[2 * k] = eb;
      r.next[tnext[k]] = tprev[k];
      r.next[tprev[k]] = ea;
      r.next[ea] = eb;
      r.next[eb] = tnext[k];
    }
    for (int k = 0; k < 3; ++k) {
      r.twin[tnext[k]] = tprev[(k + 1) % 3];
      r.twin[tprev[(k + 1) % 3]] = tnext[k];
    }
    splice_external(repl, ext);
    for (int h : {h1, h2, h3}) {
      const int a = next_[h], b = nx2(h), c = nx3(h);
      r.kill_half(h);
      r.kill_half(a);
      r.kill_half(b);
      r.kill_half(c);
    }
    r.kill_vertex(A);
    r.kill_vertex(B);
    r.kill_vertex(C);
  }
  MedialGraph g = finalize_(std::move(r));
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// Move selection and reduction.

namespace {

bool has_reducing_site(const std::vector<Move>& moves) {
  for (const Move& m : moves)
    if (m.kind != MoveKind::YangBaxter) return true;
  return false;
}

}  // namespace

std::optional<Move> MedialGraph::find_move() const {
  const auto moves = applicable_moves();
  for (const Move& m : moves)
    if (m.kind == MoveKind::LoopRemoval) return m;
  for (const Move& m : moves)
    if (m.kind == MoveKind::LensRemoval) return m;
  // Free loops are not move sites; ignore them when deciding whether any
  // rewriting is still needed (reduce() discards them at the end).
  MedialGraph probe = *this;
  probe.free_loops_ = 0;
  if (probe.is_lensless()) return std::nullopt;
  // Breadth-first search through Yang-Baxter rewrites for the nearest state
  // with an empty monogon or bigon; return the first step of that path. This
  // shrinks an innermost lens by expelling one transversal segment at a time.
  struct Node {
    MedialGraph g;
    Move first;
  };
  std::deque<Node> queue;
  std::set<std::string> seen{canonical_key()};
  for (const Move& m : moves) {
    MedialGraph child = apply_move(m);
    if (has_reducing_site(child.applicable_moves())) return m;
    if (seen.insert(child.canonical_key()).second) queue.push_back({std::move(child), m});
  }
  size_t expanded = 0;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (++expanded > 200000)
      throw std::logic_error("find_move: search exceeded state budget");
    for (const Move& m : node.g.applicable_moves()) {
      MedialGraph child = node.g.apply_move(m);
      if (has_reducing_site(child.applicable_moves())) return node.first;
      if (seen.insert(child.canonical_key()).second)
        queue.push_back({std::move(child), node.first});
    }
  }
  throw std::logic_error("find_move: graph is not lensless but no move was found");
}

MedialGraph MedialGraph::reduce() const {
  MedialGraph g = *this;
  while (auto m = g.find_move()) g = g.apply_move(*m);
  g.free_loops_ = 0;
  return g;
}

MedialGraph MedialGraph::reduce_randomized(std::mt19937_64& rng) const {
  MedialGraph g = *this;
  std::set<std::string> seen{g.canonical_key()};
  while (true) {
    std::vector<Move> moves = g.applicable_moves();
    if (moves.empty()) break;
    bool advanced = false;
    while (!moves.empty()) {
      const size_t k = rng() % moves.size();
      const Move m = moves[k];
      MedialGraph child = g.apply_move(m);
      if (m.kind == MoveKind::YangBaxter && !seen.insert(child.canonical_key()).second) {
        moves.erase(moves.begin() + static_cast<long>(k));
        continue;  // revisiting a state via Yang-Baxter would allow cycling
      }
      if (m.kind != MoveKind::YangBaxter) seen.clear();
      g = std::move(child);
      seen.insert(g.canonical_key());
      advanced = true;
      break;
    }
    if (!advanced) {
      // All unseen branches exhausted; follow the deterministic strategy
      // until the next reducing move fires.
      auto m = g.find_move();
      if (!m) break;
      while (m && m->kind == MoveKind::YangBaxter) {
        g = g.apply_move(*m);
        m = g.find_move();
      }
      if (m) g = g.apply_move(*m);
      seen.clear();
      seen.insert(g.canonical_key());
    }
  }
  g.free_loops_ = 0;
  return g;
}

Matching MedialGraph::to_matching() const {
  MedialGraph g = *this;
  g.free_loops_ = 0;
  if (!g.is_lensless()) g = g.reduce();
  std::vector<int> partner(2 * n_, 0);
  for (const Strand& s : g.strands()) {
    if (s.closed) throw std::logic_error("to_matching: closed strand after reduction");
    partner[s.end_a - 1] = s.end_b;
    partner[s.end_b - 1] = s.end_a;
  }
  return Matching(std::move(partner));
}

// ---------------------------------------------------------------------------
// Validation, keys, dumps.

void MedialGraph::validate() const {
  const int H = num_half_edges();
  for (int h = 0; h < H; ++h) {
    if (twin_[h] < 0 || twin_[h] >= H || twin_[twin_[h]] != h || twin_[h] == h)
      throw std::logic_error("validate: twin is not a fixed-point-free involution");
    if (next_[h] < 0 || next_[h] >= H) throw std::logic_error("validate: next out of range");
    if (vert_[next_[h]] != vert_[h])
      throw std::logic_error("validate: rotation leaves its vertex");
  }
  std::vector<int> deg(num_vertices(), 0);
  std::vector<char> seen(H, 0);
  for (int h = 0; h < H; ++h) {
    if (seen[h]) continue;
    int len = 0, cur = h;
    do {
      seen[cur] = 1;
      ++len;
      cur = next_[cur];
    } while (cur != h);
    const int v = vert_[h];
    deg[v] += len;
    if (len != (is_stub(v) ? 1 : 4))
      throw std::logic_error("validate: wrong rotation length");
  }
  for (int v = 0; v < num_vertices(); ++v)
    if (deg[v] != (is_stub(v) ? 1 : 4))
      throw std::logic_error("validate: wrong vertex degree");
  std::vector<char> lab(2 * n_ + 1, 0);
  for (int v = 0; v < num_vertices(); ++v)
    if (is_stub(v)) {
      const int l = stub_label(v);
      if (l < 1 || l > 2 * n_ || lab[l]) throw std::logic_error("validate: bad stub labels");
      lab[l] = 1;
      if (vert_[stub_half_[l - 1]] != v) throw std::logic_error("validate: stub ray mismatch");
    }
  for (int l = 1; l <= 2 * n_; ++l)
    if (!lab[l]) throw std::logic_error("validate: missing stub label");

  // Genus check: close the boundary with an arc between consecutive stubs;
  // every connected component of the closed map must satisfy V - E + F = 2.
  const int m = 2 * n_;
  std::vector<int> ctwin(twin_), cnext(next_), cvert(vert_);
  ctwin.resize(H + 2 * m);
  cnext.resize(H + 2 * m);
  cvert.resize(H + 2 * m);
  auto arcF = [&](int k) { return H + 2 * k; };      // at stub k+1, toward k+2
  auto arcB = [&](int k) { return H + 2 * k + 1; };  // at stub (k+1)%m+1, back
  for (int k = 0; k < m; ++k) {
    const int la = k + 1, lb = (k + 1) % m + 1;
    ctwin[arcF(k)] = arcB(k);
    ctwin[arcB(k)] = arcF(k);
    cvert[arcF(k)] = vert_[stub_half_[la - 1]];
    cvert[arcB(k)] = vert_[stub_half_[lb - 1]];
  }
  // ccw rotation at the stub labeled l: (arc to next, stub ray, arc to prev).
  for (int l = 1; l <= m; ++l) {
    const int to_next = arcF(l - 1);
    const int to_prev = arcB((l + m - 2) % m);
    const int ray = stub_half_[l - 1];
    cnext[to_next] = ray;
    cnext[ray] = to_prev;
    cnext[to_prev] = to_next;
  }
  const int CH = H + 2 * m;
  std::vector<int> comp(CH, -1);
  int ncomp = 0;
  for (int h = 0; h < CH; ++h) {
    if (comp[h] >= 0) continue;
    std::deque<int> q{h};
    comp[h] = ncomp;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int nb : {ctwin[x], cnext[x]})
        if (comp[nb] < 0) {
          comp[nb] = ncomp;
          q.push_back(nb);
        }
    }
    ++ncomp;
  }
  std::vector<int> E(ncomp, 0), F(ncomp, 0);
  std::vector<std::set<int>> Vs(ncomp);
  for (int h = 0; h < CH; ++h) {
    ++E[comp[h]];
    Vs[comp[h]].insert(cvert[h]);
  }
  std::vector<char> fseen(CH, 0);
  for (int h = 0; h < CH; ++h) {
    if (fseen[h]) continue;
    ++F[comp[h]];
    int cur = h;
    do {
      fseen[cur] = 1;
      cur = ctwin[cnext[cur]];
    } while (cur != h);
  }
  for (int c = 0; c < ncomp; ++c)
    if (static_cast<int>(Vs[c].size()) - E[c] / 2 + F[c] != 2)
      throw std::logic_error("validate: component fails the Euler check");
}

std::string MedialGraph::canonical_key() const {
  // Every public operation hands out canonically compacted graphs, so the
  // arrays can be serialized directly.
  std::string s;
  auto put = [&](int x) {
    s += std::to_string(x);
    s += ',';
  };
  put(n_);
  put(free_loops_);
  for (int h = 0; h < num_half_edges(); ++h) {
    put(twin_[h]);
    put(next_[h]);
    put(vert_[h]);
  }
  for (int v = 0; v < num_vertices(); ++v) put(vlabel_[v]);
  return s;
}

std::string MedialGraph::debug_dump() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["freeLoops"] = free_loops_;
  j["twin"] = twin_;
  j["next"] = next_;
  j["vertex"] = vert_;
  nlohmann::ordered_json stubs = nlohmann::ordered_json::array();
  for (int v = 0; v < num_vertices(); ++v)
    if (is_stub(v)) stubs.push_back({{"vertex", v}, {"label", stub_label(v)}});
  j["stubs"] = stubs;
  return j.dump();
}

// ---------------------------------------------------------------------------
// The diagram-level kappa construction.

Matching kappa_diagram(const Matching& eta, int i) {
  if (abc_class(eta, i) != BoundaryClass::B)
    throw std::invalid_argument("kappa_diagram: index must be in class B");
  const int m = eta.points();
  const int a = i, b = i % m + 1;

  // The strands from stubs a and b have to cross before meeting any other
  // strand: both stub edges must lead directly to their common crossing.
  auto ready = [&](const MedialGraph& g) {
    const int ta = g.twin(g.stub_half(a));
    const int tb = g.twin(g.stub_half(b));
    return !g.is_stub(g.vertex(ta)) && g.vertex(ta) == g.vertex(tb);
  };

  MedialGraph g = MedialGraph::from_matching(eta);
  if (!ready(g)) {
    // Clear the triangle between the boundary arc (a, b) and the crossing by
    // a shortest sequence of Yang-Baxter moves.
    std::deque<MedialGraph> queue{g};
    std::set<std::string> seen{g.canonical_key()};
    bool found = false;
    size_t expanded = 0;
    while (!queue.empty() && !found) {
      MedialGraph cur = std::move(queue.front());
      queue.pop_front();
      if (++expanded > 200000)
        throw std::logic_error("kappa_diagram: search budget exceeded");
      for (const Move& mv : cur.applicable_moves()) {
        if (mv.kind != MoveKind::YangBaxter) continue;
        MedialGraph child = cur.apply_move(mv);
        if (!seen.insert(child.canonical_key()).second) continue;
        if (ready(child)) {
          g = std::move(child);
          found = true;
          break;
        }
        queue.push_back(std::move(child));
      }
    }
    if (!found) throw std::logic_error("kappa_diagram: could not clear the corner");
  }

  const int back_a = g.twin(g.stub_half(a));
  const int back_b = g.twin(g.stub_half(b));
  const int q = g.vertex(back_a);
  const auto rr = g.rays(q);
  int pa = -1, pb = -1;
  for (int k = 0; k < 4; ++k) {
    if (rr[k] == back_a) pa = k;
    if (rr[k] == back_b) pb = k;
  }
  // The two back rays sit on different strands, so they are cyclically
  // adjacent; pick the smoothing that joins them, matching i with i+1.
  if ((pa + 1) % 4 != pb && (pb + 1) % 4 != pa)
    throw std::logic_error("kappa_diagram: stub rays not adjacent at the crossing");
  const int lo = std::min(pa, pb), hi = std::max(pa, pb);
  const int dir = ((lo == 0 && hi == 1) || (lo == 2 && hi == 3)) ? 0 : 1;
  return g.resolve_crossing(q, dir).to_matching();
}

}  // namespace uncross
