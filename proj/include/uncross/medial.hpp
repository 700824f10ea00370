// Medial graphs (strand diagrams) as rotation-system combinatorial maps:
// 4-valent internal vertices (crossings) plus 2n degree-1 boundary stubs on
// the disk boundary, labeled 1..2n counterclockwise.
//
// Half-edge h stores its twin (other end of the same edge), the
// counterclockwise-next half-edge around its vertex, and its vertex. Faces
// are the orbits of h -> twin(next(h)). Strands traverse crossings straight
// through: arriving on ray r they leave on next(next(r)).
//
// Graphs are immutable; every operation returns a new, compacted graph with
// deterministic numbering. Closed curves that carry no crossing at all are
// tracked by a counter, since they have no half-edges to represent them.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uncross/matching.hpp"

namespace uncross {

struct Strand {
  bool closed = false;
  int end_a = 0, end_b = 0;      // boundary labels when open
  std::vector<int> half_edges;   // forward rays in traversal order
  std::vector<int> vertices;     // internal vertices visited, in order
};

enum class MoveKind { YangBaxter, LensRemoval, LoopRemoval };

// A rewriting move anchored at a face, identified by the smallest half-edge
// of its orbit. LoopRemoval sites are empty monogons, LensRemoval sites empty
// bigons (two distinct crossings), YangBaxter sites triangle faces.
struct Move {
  MoveKind kind;
  int face;
};

struct Face {
  std::vector<int> half_edges;  // the orbit, starting from its minimum
  bool internal = false;        // touches no boundary stub
};

struct MedialRawMap;  // mutable half-edge soup used during construction

class MedialGraph {
 public:
  // A lensless diagram of tau: boundary points on a convex arc with exact
  // integer coordinates, chords drawn straight, crossings ordered along each
  // chord by exact intersection parameter. The coordinates are perturbed
  // deterministically until no three chords are concurrent.
  static MedialGraph from_matching(const Matching& tau);

  // Raw construction for fixtures; validates everything.
  static MedialGraph from_arrays(int n, std::vector<int> twin, std::vector<int> next,
                                 std::vector<int> vertex_of, std::vector<int> stub_vertex,
                                 int free_loops = 0);

  int n() const { return n_; }
  int num_half_edges() const { return static_cast<int>(twin_.size()); }
  int num_vertices() const { return static_cast<int>(vfirst_.size()); }
  int crossings() const;
  int free_loops() const { return free_loops_; }

  int twin(int h) const { return twin_[h]; }
  int next(int h) const { return next_[h]; }
  int vertex(int h) const { return vert_[h]; }
  bool is_stub(int v) const { return vlabel_[v] != 0; }
  int stub_label(int v) const { return vlabel_[v]; }
  int stub_half(int label) const { return stub_half_[label - 1]; }
  std::vector<int> internal_vertices() const;
  // Rays of an internal vertex in ccw rotation order, anchored at the
  // smallest half-edge id.
  std::array<int, 4> rays(int v) const;

  std::vector<Face> faces() const;
  std::vector<Strand> strands() const;

  // No two strands meet twice, no strand self-intersects, no closed strands,
  // no free loops.
  bool is_lensless() const;

  // Remove crossing v and rejoin the four edge-ends as two non-crossing
  // arcs: dir 0 joins rotation-adjacent rays (0,1) and (2,3) of rays(v),
  // dir 1 joins (1,2) and (3,0). May create lenses or closed loops.
  MedialGraph resolve_crossing(int v, int dir) const;
  // Resolve several crossings of this graph simultaneously.
  MedialGraph resolve_crossings(const std::vector<std::pair<int, int>>& sites) const;

  std::vector<Move> applicable_moves() const;

  // Preferred applicable move: an empty monogon if any, else an empty bigon,
  // else the first step of a shortest Yang-Baxter sequence that exposes one
  // (found by breadth-first search over Yang-Baxter rewrites; such a
  // sequence exists whenever the graph is not lensless). Empty iff lensless.
  std::optional<Move> find_move() const;

  MedialGraph apply_move(const Move& m) const;

  // Iterate find_move/apply_move to a lensless graph; drops free loops.
  MedialGraph reduce() const;
  // Same endpoint but picking uniformly among applicable moves; revisiting a
  // seen state via Yang-Baxter is disallowed so termination is forced.
  MedialGraph reduce_randomized(std::mt19937_64& rng) const;

  // The matching realized by the strands of reduce().
  Matching to_matching() const;

  // The crossing where the strands from stubs a and b first meet (-1 if the
  // strands do not cross).
  int crossing_of(int label_a, int label_b) const;

  // Twin involution, rotation degrees, stub labels, and genus-0 Euler count
  // per component of the boundary-closed map.
  void validate() const;

  std::string canonical_key() const;
  std::string debug_dump() const;  // JSON: n, freeLoops, twin, next, vertex, stubs

 private:
  static MedialGraph finalize_(MedialRawMap&& raw);
  std::vector<int> face_orbit(int h) const;

  int n_ = 0;
  int free_loops_ = 0;
  std::vector<int> twin_, next_, vert_;
  std::vector<int> vfirst_;     // one half-edge per vertex
  std::vector<int> vlabel_;     // boundary label, or 0 for crossings
  std::vector<int> stub_half_;  // label-1 -> half-edge
};

// The diagram-level construction of the maximal element kappa below eta whose
// class at i is C: clear the triangle between the boundary arc (i, i+1) and
// the crossing q of the strands from i and i+1 using Yang-Baxter moves until
// q is the first crossing on both strands, resolve q so that i is matched
// with i+1, and reduce. Requires i in B(eta).
Matching kappa_diagram(const Matching& eta, int i);

}  // namespace uncross
