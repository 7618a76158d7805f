#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weaveclust/ngraph.hpp"

namespace weaveclust {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("ngraph: " + msg);
}

constexpr auto kBoundary = NGraphVertexKind::Boundary;
constexpr auto kHexagonal = NGraphVertexKind::Hexagonal;
constexpr auto kCrossing = NGraphVertexKind::Crossing;

int mod(int a, int m) { return ((a % m) + m) % m; }

int word_sheets(const std::vector<int>& word) {
  int top = 2;
  for (int c : word) {
    if (c < 1) fail("braid letters must be >= 1");
    top = std::max(top, c + 1);
  }
  return top;
}

}  // namespace

// All annuli below are laid out in a strip: inner circle on top, outer on
// the bottom, slot positions increasing to the right on both.

AnnularNGraph rotation_annulus(const std::vector<int>& word, int steps) {
  const int n = static_cast<int>(word.size());
  if (n < 2) fail("rotation annulus needs at least two strands");
  for (int j = 0; j < n; ++j)
    if (word[mod(j - steps, n)] != word[j])
      fail("rotation annulus needs a shift-invariant word");
  NGraphBuilder bld(word_sheets(word));
  std::vector<int> outer(n), inner(n);
  for (int i = 0; i < n; ++i) outer[i] = bld.add_vertex(kBoundary);
  for (int i = 0; i < n; ++i) inner[i] = bld.add_vertex(kBoundary);
  for (int i = 0; i < n; ++i)
    bld.add_edge(outer[i], inner[mod(i + steps, n)], word[i]);
  return bld.build(std::move(outer), std::move(inner));
}

AnnularNGraph elementary_annulus_r0(const std::vector<int>& word, int pos) {
  const int n = static_cast<int>(word.size());
  if (n < 2) fail("far commutation needs at least two strands");
  if (pos < 0 || pos >= n) fail("far commutation position out of range");
  const int j = mod(pos + 1, n);
  if (std::abs(word[pos] - word[j]) < 2)
    fail("far commutation needs colors at distance >= 2");
  NGraphBuilder bld(word_sheets(word));
  std::vector<int> outer(n), inner(n);
  for (int i = 0; i < n; ++i) outer[i] = bld.add_vertex(kBoundary);
  for (int i = 0; i < n; ++i) inner[i] = bld.add_vertex(kBoundary);
  const int x = bld.add_vertex(kCrossing);
  for (int i = 0; i < n; ++i)
    if (i != pos && i != j) bld.add_edge(outer[i], inner[i], word[i]);
  // The two strands pass straight through the crossing: inner pos exits at
  // outer j and vice versa, so the outer word has the two letters swapped.
  const int ti = bld.add_edge(x, inner[pos], word[pos]);
  const int to = bld.add_edge(x, outer[pos], word[j]);
  const int tj = bld.add_edge(x, outer[j], word[pos]);
  const int tk = bld.add_edge(x, inner[j], word[j]);
  bld.set_rotation(x, {ti, to, tj, tk});
  return bld.build(std::move(outer), std::move(inner));
}

AnnularNGraph elementary_annulus_riii(const std::vector<int>& word, int pos) {
  const int n = static_cast<int>(word.size());
  if (n < 3) fail("braid move needs at least three strands");
  if (pos < 0 || pos >= n) fail("braid move position out of range");
  const int p0 = pos, p1 = mod(pos + 1, n), p2 = mod(pos + 2, n);
  const int x = word[p0], y = word[p1];
  if (word[p2] != x || std::abs(x - y) != 1)
    fail("braid move needs letters x y x with |x - y| = 1");
  NGraphBuilder bld(word_sheets(word));
  std::vector<int> outer(n), inner(n);
  for (int i = 0; i < n; ++i) outer[i] = bld.add_vertex(kBoundary);
  for (int i = 0; i < n; ++i) inner[i] = bld.add_vertex(kBoundary);
  const int h = bld.add_vertex(kHexagonal);
  for (int i = 0; i < n; ++i)
    if (i != p0 && i != p1 && i != p2) bld.add_edge(outer[i], inner[i], word[i]);
  // x y x below the hexagon becomes y x y above it.
  const int l0 = bld.add_edge(h, inner[p0], x);
  const int l1 = bld.add_edge(h, inner[p1], y);
  const int l2 = bld.add_edge(h, inner[p2], x);
  const int u0 = bld.add_edge(h, outer[p0], y);
  const int u1 = bld.add_edge(h, outer[p1], x);
  const int u2 = bld.add_edge(h, outer[p2], y);
  bld.set_rotation(h, {l0, u0, u1, u2, l2, l1});
  return bld.build(std::move(outer), std::move(inner));
}

namespace {

// Appends b's vertices and edges to a copy of a; boundary lists are left
// for the caller to assemble.
NGraph merge_disjoint(const NGraph& a, const NGraph& b) {
  NGraph g = a;
  const int v0 = static_cast<int>(a.vertices.size());
  const int e0 = a.edge_count();
  for (NGraphVertex v : b.vertices) {
    for (int& h : v.rot) h += 2 * e0;
    g.vertices.push_back(std::move(v));
  }
  g.edge_color.insert(g.edge_color.end(), b.edge_color.begin(),
                      b.edge_color.end());
  for (int hv : b.half_edge_vertex) g.half_edge_vertex.push_back(hv + v0);
  return g;
}

// Fuses matched boundary legs: for each pair (va, vb) of boundary vertices,
// the edge at va is re-ended onto the far vertex of vb's leg, and vb's leg
// dies. All paired vertices are removed.
NGraph glue_pairs(NGraph g, const std::vector<std::pair<int, int>>& pairs) {
  std::set<int> dying;
  for (const auto& [va, vb] : pairs) {
    dying.insert(va);
    dying.insert(vb);
  }
  std::vector<int> dead_edges, dead_vertices;
  for (const auto& [va, vb] : pairs) {
    const int la = g.vertices[va].rot.at(0);
    const int lb = g.vertices[vb].rot.at(0);
    const int ua = g.half_edge_vertex[NGraph::twin(la)];
    const int ub = g.half_edge_vertex[NGraph::twin(lb)];
    if (dying.count(ua) || dying.count(ub))
      fail("unsupported configuration: gluing a bare boundary arc");
    for (int& h : g.vertices[ub].rot)
      if (h == NGraph::twin(lb)) {
        h = la;
        break;
      }
    g.half_edge_vertex[la] = ub;
    dead_edges.push_back(NGraph::edge_of(lb));
    dead_vertices.push_back(va);
    dead_vertices.push_back(vb);
  }
  detail::remove_edges(g, std::move(dead_edges));
  detail::remove_vertices(g, std::move(dead_vertices));
  return g;
}

}  // namespace

NGraph concatenate(const AnnularNGraph& a, const NGraph& disk) {
  if (a.sheets != disk.sheets) fail("concatenate: sheet counts differ");
  if (a.inner_boundary.empty()) fail("concatenate: first factor must be an annulus");
  if (!disk.inner_boundary.empty()) fail("concatenate: second factor must be a disk");
  const auto words = boundary_words_annulus(a);
  if (words.second != boundary_word(disk))
    fail("concatenate: gluing words do not match");
  NGraph g = merge_disjoint(a, disk);
  const int v0 = static_cast<int>(a.vertices.size());
  g.outer_boundary = a.outer_boundary;
  g.inner_boundary.clear();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(a.inner_boundary.size()); ++i)
    pairs.emplace_back(a.inner_boundary[i], disk.outer_boundary[i] + v0);
  g = glue_pairs(std::move(g), pairs);
  validate(g);
  return g;
}

AnnularNGraph concatenate(const AnnularNGraph& a, const AnnularNGraph& b,
                          int offset) {
  if (a.sheets != b.sheets) fail("concatenate: sheet counts differ");
  if (a.inner_boundary.empty() || b.inner_boundary.empty())
    fail("concatenate: both factors must be annuli");
  const int n = static_cast<int>(a.inner_boundary.size());
  if (static_cast<int>(b.outer_boundary.size()) != n)
    fail("concatenate: gluing words do not match");
  const auto wa = boundary_words_annulus(a).second;
  const auto wb = boundary_words_annulus(b).first;
  for (int i = 0; i < n; ++i)
    if (wa[i] != wb[mod(i + offset, n)])
      fail("concatenate: gluing words do not match");
  NGraph g = merge_disjoint(a, b);
  const int v0 = static_cast<int>(a.vertices.size());
  g.outer_boundary = a.outer_boundary;
  g.inner_boundary.clear();
  for (int v : b.inner_boundary) g.inner_boundary.push_back(v + v0);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    pairs.emplace_back(a.inner_boundary[i],
                       b.outer_boundary[mod(i + offset, n)] + v0);
  g = glue_pairs(std::move(g), pairs);
  validate(g);
  return g;
}

AnnularNGraph mirror_annulus(AnnularNGraph g) {
  for (auto& v : g.vertices) std::reverse(v.rot.begin(), v.rot.end());
  std::reverse(g.outer_boundary.begin(), g.outer_boundary.end());
  std::reverse(g.inner_boundary.begin(), g.inner_boundary.end());
  validate(g);
  return g;
}

// One Coxeter step on the tripod family: a circumferential band of
// a + b + c hexagons in three sector chains. Each hexagon hangs one radial
// leg on each circle; at a sector joint the first hexagon reaches two legs
// to the outer circle and the previous chain's last hexagon reaches two to
// the inner circle. Outer word: 2 1^{a+1} 2 1^{b+1} 2 1^{c+1}; inner word:
// the same with colors swapped, aligned sector by sector.
AnnularNGraph coxeter_padding_tripod(int a, int b, int c, bool conjugated) {
  if (a < 1 || b < 1 || c < 1) fail("coxeter_padding_tripod needs a, b, c >= 1");
  constexpr int B = 1, R = 2;
  const int len[3] = {a, b, c};
  NGraphBuilder bld(3);

  std::vector<std::vector<int>> hex(3);
  for (int s = 0; s < 3; ++s)
    for (int j = 0; j < len[s]; ++j) hex[s].push_back(bld.add_vertex(kHexagonal));

  auto leg = [&](std::vector<int>& circle, int from, int color) {
    const int bv = bld.add_vertex(kBoundary);
    circle.push_back(bv);
    return bld.add_edge(from, bv, color);
  };

  std::vector<int> outer, inner;
  std::vector<int> red_leg(3), blue_prev(3);
  std::vector<std::vector<int>> radial(3);
  for (int s = 0; s < 3; ++s) {
    red_leg[s] = leg(outer, hex[s][0], R);
    radial[s].resize(len[s]);
    for (int j = 0; j < len[s]; ++j) radial[s][j] = leg(outer, hex[s][j], B);
    const int t = (s + 1) % 3;
    blue_prev[t] = leg(outer, hex[t][0], B);
  }

  std::vector<int> blue_in(3), red_in(3);
  std::vector<std::vector<int>> spoke(3);
  for (int s = 0; s < 3; ++s) {
    const int src = hex[(s + 2) % 3].back();
    blue_in[s] = leg(inner, src, B);
    red_in[s] = leg(inner, src, R);
    spoke[s].resize(len[s]);
    for (int j = 0; j < len[s]; ++j) spoke[s][j] = leg(inner, hex[s][j], R);
  }

  std::vector<std::vector<int>> red_arc(3), blue_arc(3);
  for (int s = 0; s < 3; ++s)
    for (int j = 0; j + 1 < len[s]; ++j) {
      red_arc[s].push_back(bld.add_edge(hex[s][j], hex[s][j + 1], R));
      blue_arc[s].push_back(bld.add_edge(hex[s][j], hex[s][j + 1], B));
    }

  for (int s = 0; s < 3; ++s) {
    const int x = len[s], nxt = (s + 1) % 3;
    for (int j = 0; j < x; ++j) {
      std::vector<int> rot{radial[s][j]};
      if (j + 1 < x) {
        rot.push_back(red_arc[s][j]);
        rot.push_back(blue_arc[s][j]);
      } else {
        rot.push_back(red_in[nxt]);
        rot.push_back(blue_in[nxt]);
      }
      rot.push_back(spoke[s][j]);
      if (j > 0) {
        rot.push_back(blue_arc[s][j - 1]);
        rot.push_back(red_arc[s][j - 1]);
      } else {
        rot.push_back(blue_prev[s]);
        rot.push_back(red_leg[s]);
      }
      bld.set_rotation(hex[s][j], std::move(rot));
    }
  }

  NGraph g = bld.build(std::move(outer), std::move(inner));
  return conjugated ? conjugate(std::move(g)) : g;
}

namespace {

// Radial core of the affine-D Coxeter padding: twelve hexagons named
// P1..P6 and their half-turn copies Q1..Q6. Edge tokens are (base, primed)
// with primed = the half-turn copy; four tokens coincide with base names
// (b8' = b13, b13' = b8, g1' = g2, g2' = g1). Base ids: b1..b16 -> 0..15,
// r1..r12 -> 16..27, g1 -> 28, g2 -> 29.
struct AffineToken {
  int base = 0;
  bool primed = false;
};

AffineToken affine_canon(AffineToken t) {
  if (!t.primed) return t;
  switch (t.base) {
    case 7:  return {12, false};
    case 12: return {7, false};
    case 28: return {29, false};
    case 29: return {28, false};
    default: return t;
  }
}

int affine_key(AffineToken t) {
  t = affine_canon(t);
  return 2 * t.base + (t.primed ? 1 : 0);
}

int affine_color(int base) {
  if (base < 16) return 1;
  if (base < 28) return 2;
  return 3;
}

constexpr int kB(int i) { return i - 1; }
constexpr int kR(int i) { return 15 + i; }
constexpr int kG1 = 28, kG2 = 29;

}  // namespace

// One Coxeter step on the affine-D family: a single radial layer of twelve
// hexagons with half-turn symmetry; for n > 4 the extra strands of the
// braid word pass through untouched, floor((n-3)/2) of them next to one
// color-3 strand and floor((n-4)/2) next to the other. Both words read the
// annular affine-D braid word up to rotation.
AnnularNGraph coxeter_padding_affine_d(int n, bool inverse) {
  if (n < 4) fail("coxeter_padding_affine_d needs n >= 4");
  const int k = (n - 3) / 2, l = (n - 4) / 2;

  // Counterclockwise hexagon rotations, primes toggled for the Q copies.
  const std::vector<std::vector<AffineToken>> hex_rot = {
      {{kR(5), false}, {kB(1), false}, {kR(6), false},
       {kB(3), false}, {kR(4), false}, {kB(2), false}},   // P1
      {{kB(4), false}, {kR(12), false}, {kB(15), false},
       {kR(11), false}, {kB(16), false}, {kR(10), false}},  // P2
      {{kR(3), false}, {kB(9), false}, {kR(4), false},
       {kB(3), false}, {kR(10), false}, {kB(10), false}},  // P3
      {{kB(7), false}, {kR(1), false}, {kB(5), false},
       {kR(3), false}, {kB(6), false}, {kR(2), false}},    // P4
      {{kR(7), true}, {kB(8), false}, {kR(9), true},
       {kB(7), false}, {kR(8), true}, {kB(14), true}},     // P5
      {{kR(7), false}, {kB(12), false}, {kR(12), false},
       {kB(4), false}, {kR(6), false}, {kB(11), false}},   // P6
  };

  // Boundary slot tokens, counterclockwise; strand legs are spliced in
  // after the marked slots.
  const std::vector<AffineToken> outer_base = {
      {kB(10), false}, {kB(6), false}, {kR(2), false},  // then l strands
      {kG2, false},    {kR(8), true},  {kB(14), true},  {kB(12), true},
      {kB(15), true},  {kR(11), true}, {kB(16), true},  {kB(10), true},
      {kB(6), true},   {kR(2), true},                   // then k strands
      {kG1, false},    {kR(8), false}, {kB(14), false}, {kB(12), false},
      {kB(15), false}, {kR(11), false}, {kB(16), false}};
  const std::vector<AffineToken> inner_base = {
      {kB(5), false}, {kR(1), false},                   // then l strands
      {kG2, false},   {kR(9), true},  {kB(8), false},  {kB(11), true},
      {kB(1), true},  {kR(5), true},  {kB(2), true},   {kB(9), true},
      {kB(5), true},  {kR(1), true},                   // then k strands
      {kG1, false},   {kR(9), false}, {kB(13), false}, {kB(11), false},
      {kB(1), false}, {kR(5), false}, {kB(2), false},  {kB(9), false}};

  NGraphBuilder bld(4);
  std::vector<int> hex_ids(12);
  for (int i = 0; i < 12; ++i) hex_ids[i] = bld.add_vertex(kHexagonal);

  // token key -> endpoints / color, strands keyed past the base range.
  std::map<int, std::vector<int>> ends;
  std::map<int, int> color;
  auto touch = [&](int key, int vertex, int col) {
    ends[key].push_back(vertex);
    color[key] = col;
  };
  for (int half = 0; half < 2; ++half)
    for (int i = 0; i < 6; ++i)
      for (const AffineToken& t : hex_rot[i]) {
        const AffineToken c = affine_canon({t.base, t.primed != (half == 1)});
        touch(affine_key(c), hex_ids[6 * half + i], affine_color(c.base));
      }

  const int strand_key0 = 100;
  std::vector<int> outer, inner;
  auto lay_circle = [&](const std::vector<AffineToken>& base, int after_l,
                        int after_k, std::vector<int>& circle) {
    for (int i = 0; i < static_cast<int>(base.size()); ++i) {
      auto slot = [&](int key, int col) {
        const int bv = bld.add_vertex(kBoundary);
        circle.push_back(bv);
        touch(key, bv, col);
      };
      if (i == after_l)
        for (int j = 0; j < l; ++j) slot(strand_key0 + j, 1);
      if (i == after_k)
        for (int j = 0; j < k; ++j) slot(strand_key0 + l + j, 1);
      const AffineToken c = affine_canon(base[i]);
      slot(affine_key(c), affine_color(c.base));
    }
  };
  lay_circle(outer_base, 3, 13, outer);
  lay_circle(inner_base, 2, 12, inner);

  std::map<int, int> edge_of_key;
  for (const auto& [key, vs] : ends) {
    if (vs.size() != 2) fail("affine padding token is not an edge");
    edge_of_key[key] = bld.add_edge(vs[0], vs[1], color[key]);
  }
  for (int half = 0; half < 2; ++half)
    for (int i = 0; i < 6; ++i) {
      std::vector<int> rot;
      for (const AffineToken& t : hex_rot[i])
        rot.push_back(edge_of_key[affine_key(
            affine_canon({t.base, t.primed != (half == 1)}))]);
      bld.set_rotation(hex_ids[6 * half + i], std::move(rot));
    }

  NGraph g = bld.build(std::move(outer), std::move(inner));
  return inverse ? mirror_annulus(std::move(g)) : g;
}

AnnularNGraph move_one_cleanup(AnnularNGraph g) {
  const auto edge_at = [&](int v, int slot) {
    const auto& rot = g.vertices[v].rot;
    return NGraph::edge_of(rot[mod(slot, static_cast<int>(rot.size()))]);
  };
  // Start slot of the window whose three consecutive edges are exactly
  // `shared`, or -1.
  const auto window_start = [&](int v, const std::set<int>& shared) {
    const auto& rot = g.vertices[v].rot;
    std::vector<bool> in(6);
    for (int t = 0; t < 6; ++t) in[t] = shared.count(NGraph::edge_of(rot[t])) > 0;
    for (int i = 0; i < 6; ++i)
      if (in[i] && in[(i + 1) % 6] && in[(i + 2) % 6] && !in[(i + 3) % 6] &&
          !in[(i + 4) % 6] && !in[(i + 5) % 6])
        return i;
    return -1;
  };

  for (bool progress = true; progress;) {
    progress = false;
    const int nv = static_cast<int>(g.vertices.size());
    for (int u = 0; u < nv && !progress; ++u) {
      if (g.vertices[u].kind != kHexagonal) continue;
      for (int v = u + 1; v < nv && !progress; ++v) {
        if (g.vertices[v].kind != kHexagonal) continue;
        std::set<int> shared;
        for (int h : g.vertices[u].rot) {
          const int e = NGraph::edge_of(h);
          if (g.half_edge_vertex[NGraph::twin(h)] == v) shared.insert(e);
        }
        if (shared.size() != 3) continue;
        const int i = window_start(u, shared);
        const int j = window_start(v, shared);
        if (i < 0 || j < 0) continue;
        bool aligned = true;
        for (int t = 0; t < 3; ++t)
          aligned = aligned && edge_at(u, i + t) == edge_at(v, j + 2 - t);
        if (!aligned) continue;

        // Splice the three remaining legs of u onto those of v pairwise.
        std::vector<int> dead(shared.begin(), shared.end());
        for (int t = 0; t < 3; ++t) {
          const int hu = g.vertices[u].rot[mod(i + 3 + t, 6)];
          const int hv = g.vertices[v].rot[mod(j - 1 - t, 6)];
          const int p = NGraph::edge_of(hu), q = NGraph::edge_of(hv);
          if (g.edge_color[p] != g.edge_color[q])
            throw std::logic_error("ngraph: spliced leg colors disagree");
          const int fp = g.half_edge_vertex[NGraph::twin(hu)];
          const int fq = g.half_edge_vertex[NGraph::twin(hv)];
          if (fp == u || fp == v || fq == u || fq == v || fp == fq)
            fail("unsupported configuration: cancellation closes a loop");
          const int ne = g.edge_count();
          g.edge_color.push_back(g.edge_color[p]);
          g.half_edge_vertex.push_back(fp);
          g.half_edge_vertex.push_back(fq);
          for (int& h : g.vertices[fp].rot)
            if (h == NGraph::twin(hu)) {
              h = 2 * ne;
              break;
            }
          for (int& h : g.vertices[fq].rot)
            if (h == NGraph::twin(hv)) {
              h = 2 * ne + 1;
              break;
            }
          dead.push_back(p);
          dead.push_back(q);
        }
        detail::remove_edges(g, std::move(dead));
        detail::remove_vertices(g, {u, v});
        progress = true;
      }
    }
  }
  validate(g);
  return g;
}

bool is_trivial_annulus(const AnnularNGraph& g) {
  if (g.inner_boundary.empty()) return false;
  for (const auto& v : g.vertices)
    if (v.kind != kBoundary) return false;
  const int n = static_cast<int>(g.outer_boundary.size());
  if (static_cast<int>(g.inner_boundary.size()) != n) return false;
  std::unordered_map<int, int> inner_pos;
  for (int t = 0; t < n; ++t) inner_pos[g.inner_boundary[t]] = t;
  int shift = -1;
  for (int i = 0; i < n; ++i) {
    const int leg = g.vertices[g.outer_boundary[i]].rot.at(0);
    const auto it = inner_pos.find(g.half_edge_vertex[NGraph::twin(leg)]);
    if (it == inner_pos.end()) return false;
    const int d = mod(it->second - i, n);
    if (shift < 0) shift = d;
    if (d != shift) return false;
  }
  return true;
}

}  // namespace weaveclust
