#pragma once
#include <optional>
#include <string>
#include <vector>

#include "weaveclust/dynkin.hpp"

namespace weaveclust {

// Planar N-graphs on the disk or the annulus, stored as a combinatorial map.
// Edge e owns half-edges 2e and 2e+1; twin(h) = h^1. Every rotation list is
// counterclockwise. Colors are 1-based sheet gaps in 1..sheets-1.

enum class NGraphVertexKind { Boundary, Trivalent, Hexagonal, Crossing };

struct NGraphVertex {
  NGraphVertexKind kind = NGraphVertexKind::Boundary;
  // Sorted distinct incident edge colors: {} boundary, {c} trivalent,
  // {c, c+1} hexagonal, {c, c'} with |c - c'| >= 2 crossing.
  std::vector<int> colors;
  // Incident half-edge ids, counterclockwise.
  std::vector<int> rot;

  friend bool operator==(const NGraphVertex&, const NGraphVertex&) = default;
};

struct NGraph {
  int sheets = 2;
  std::vector<NGraphVertex> vertices;
  std::vector<int> edge_color;        // edge e -> color
  std::vector<int> half_edge_vertex;  // half-edge h -> vertex id
  // Boundary vertex ids in counterclockwise order; inner_boundary is empty
  // exactly when the graph lives on the disk.
  std::vector<int> outer_boundary;
  std::vector<int> inner_boundary;

  int edge_count() const { return static_cast<int>(edge_color.size()); }
  static int twin(int h) { return h ^ 1; }
  static int edge_of(int h) { return h / 2; }

  friend bool operator==(const NGraph&, const NGraph&) = default;
};

using AnnularNGraph = NGraph;

// Incremental construction; rotations are given as edge-id lists and
// resolved to half-edges at build time (a repeated edge id resolves
// positionally: first occurrence 2e, second 2e+1).
class NGraphBuilder {
 public:
  explicit NGraphBuilder(int sheets);

  int add_vertex(NGraphVertexKind kind);
  int add_edge(int u, int v, int color);  // half 2e at u, 2e+1 at v
  void set_rotation(int v, std::vector<int> edge_ids);

  // Resolves rotations, derives vertex colors, and validates the result.
  NGraph build(std::vector<int> outer, std::vector<int> inner = {});

 private:
  NGraph g_;
  std::vector<std::vector<int>> pending_rot_;
};

// One-cycle descriptions carried alongside a graph. YUpper is the Y-cycle
// whose tree color c is the lower color of its hexagons' pair (c, c+1);
// YLower has tree color c with hexagon pair (c-1, c).
enum class CycleKind { I, LongI, YUpper, YLower };

struct CycleSpec {
  CycleKind kind = CycleKind::I;
  std::vector<int> edges;

  friend bool operator==(const CycleSpec&, const CycleSpec&) = default;
};

struct NGraphWithCycles {
  NGraph g;
  std::vector<CycleSpec> cycles;
  // +1 source, -1 sink, 0 mixed or unavailable; from the induced quiver.
  std::vector<int> cycle_class;

  friend bool operator==(const NGraphWithCycles&,
                         const NGraphWithCycles&) = default;
};

// Structural validation: sizes and rotation consistency, vertex degree and
// color rules, boundary circles of length >= 2, and planarity of the
// rim-augmented map (Euler count 2, connected, one all-rim face per
// circle). Throws std::invalid_argument with a description on failure.
void validate(const NGraph& g);

// Cycle validation against `g`: I is one edge with distinct trivalent ends;
// LongI a straight path (hexagons crossed at opposite slots, crossings
// passed straight) with trivalent ends; Y a monochromatic tree with
// trivalent leaves whose hexagons contribute exactly their three tree-color
// edges and whose crossings are passed straight.
void validate(const NGraph& g, const CycleSpec& cycle);

// Recognizes the kind of an edge set: single edge -> I, path -> LongI,
// branched tree -> YUpper/YLower by the hexagon pair rule.
CycleKind infer_cycle_kind(const NGraph& g, const std::vector<int>& edges);

// Validates everything and computes cycle classes.
NGraphWithCycles with_cycles(NGraph g, std::vector<CycleSpec> cycles);

// Leg colors read along the boundary circles.
std::vector<int> boundary_word(const NGraph& g);
std::pair<std::vector<int>, std::vector<int>> boundary_words_annulus(
    const AnnularNGraph& g);

// Signed count over shared vertices. At a shared trivalent vertex with a
// through slot s and b through slot s', the contribution is +1 if
// s' = s+2 (mod 3), -1 if s' = s+1, 0 on a shared edge. At a shared
// hexagonal vertex both cycles must cross as chords (two edges at opposite
// rot slots); distinct chords with slot classes p, q (mod 3) contribute +1
// if q = p+1, -1 if q = p+2, and the same chord contributes 0. Any other
// shared hexagon is rejected with std::invalid_argument.
long long intersection_number(const NGraph& g, const CycleSpec& a,
                              const CycleSpec& b);

// b[i][j] = intersection_number(cycles[i], cycles[j]); b[i][j] > 0 reads as
// an arrow i -> j.
IntMatrix quiver_from_cycles(const NGraph& g,
                             const std::vector<CycleSpec>& cycles);

// Boundary-anchored isomorphism: outer circles are matched at the given
// offset (a.outer[i] -> b.outer[i+offset]) and the map is propagated through
// twins and rotation alignment; inner circles may match at any offset.
bool isomorphic_at_offset(const NGraph& a, const NGraph& b, int offset);
bool isomorphic(const NGraph& a, const NGraph& b);  // tries all offsets

// As above, and cycle k of `a` must map onto cycle perm[k] of `b` with equal
// kind.
bool isomorphic_at_offset(const NGraphWithCycles& a, const NGraphWithCycles& b,
                          int offset, const std::vector<int>& perm);
bool isomorphic(const NGraphWithCycles& a, const NGraphWithCycles& b,
                const std::vector<int>& perm);

// Sheet reversal c -> sheets - c. Rotations are untouched, so the induced
// quiver is unchanged; YUpper and YLower swap.
NGraph conjugate(NGraph g);
NGraphWithCycles conjugate(NGraphWithCycles gb);

// Re-roots the outer boundary of a disk: new outer[i] = old outer[i+s].
NGraph rotate(NGraph g, int s);
NGraphWithCycles rotate(NGraphWithCycles gb, int s);

// Self-isomorphism at a boundary shift with a prescribed cycle permutation.
bool is_invariant(const NGraphWithCycles& gb, int steps,
                  const std::vector<int>& cycle_perm);

// Sufficient freeness criterion: every monochromatic subgraph is acyclic.
bool is_free_sufficient(const NGraph& g);

// Legendrian mutation at cycle k. Supported shapes: I (two-trivalent edge
// rewiring), LongI (pushed through interior hexagons until short), and Y
// (hexagon flower rewrite, or its exact inverse when the flower pattern is
// already present). Bystander cycles are transported; the boundary word is
// preserved exactly. Throws std::invalid_argument("unsupported
// configuration...") when the local pattern has no implemented rewrite.
NGraphWithCycles mutate(const NGraphWithCycles& gb, int k);

// Mutates every sink cycle in index order, then every source cycle
// (inverse swaps the two passes). Requires all classes to be +-1 and
// same-class cycles pairwise vertex-disjoint.
NGraphWithCycles legendrian_coxeter_mutation(const NGraphWithCycles& gb,
                                             bool inverse = false);

// Canonical disk families carrying their standard cycle bases.
NGraphWithCycles build_linear(int n);             // 2-graph, word 1^{n+3}
NGraphWithCycles build_tripod(int a, int b, int c);  // 3-graph
NGraphWithCycles build_affine_d(int n);           // 4-graph, n >= 4

// Annular paddings. rotation_annulus carries word w on both circles with
// arcs outer i -> inner i+steps (requires w invariant under the shift);
// the elementary annuli realize one far-commutation (R0) or one braid move
// (RIII) between the inner word (as given) and the outer word (rewritten).
AnnularNGraph rotation_annulus(const std::vector<int>& word, int steps);
AnnularNGraph elementary_annulus_r0(const std::vector<int>& word, int pos);
AnnularNGraph elementary_annulus_riii(const std::vector<int>& word, int pos);

// Gluing. The annulus-disk form requires inner(a) == boundary_word(disk)
// position to position; the annulus-annulus form glues a.inner[i] onto
// b.outer[i+offset]. Matched legs are spliced into single edges.
NGraph concatenate(const AnnularNGraph& a, const NGraph& disk);
AnnularNGraph concatenate(const AnnularNGraph& a, const AnnularNGraph& b,
                          int offset);

// Orientation reversal: every rotation list and both boundary orders are
// reversed; colors are kept.
AnnularNGraph mirror_annulus(AnnularNGraph g);

// Coxeter paddings: annuli realizing one Coxeter mutation step as a
// cobordism. The tripod padding has outer word beta(a,b,c) and inner word
// its color conjugate; `conjugated` swaps the two colors throughout. The
// affine-D padding has beta(affine D_n) on both circles; `inverse` mirrors
// it.
AnnularNGraph coxeter_padding_tripod(int a, int b, int c,
                                     bool conjugated = false);
AnnularNGraph coxeter_padding_affine_d(int n, bool inverse = false);

// Greedy cancellation: repeatedly removes a hexagon pair sharing exactly
// three consecutive edges and splices their remaining legs pairwise.
AnnularNGraph move_one_cleanup(AnnularNGraph g);

// No interior vertices and the arcs realize one constant boundary shift.
bool is_trivial_annulus(const AnnularNGraph& g);

namespace detail {

// Surgery helpers. Both return old-id -> new-id maps (-1 for removed ids)
// after compacting; rotations, boundary lists and half_edge_vertex are
// rewritten in place. Callers must restore validity before validate().
std::vector<int> remove_edges(NGraph& g, std::vector<int> edges);
std::vector<int> remove_vertices(NGraph& g, std::vector<int> vertex_ids);
void recompute_vertex_colors(NGraph& g);

}  // namespace detail

}  // namespace weaveclust
