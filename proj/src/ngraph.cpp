#include "weaveclust/ngraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace weaveclust {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("ngraph: " + msg);
}

int degree_of(NGraphVertexKind k) {
  switch (k) {
    case NGraphVertexKind::Boundary: return 1;
    case NGraphVertexKind::Trivalent: return 3;
    case NGraphVertexKind::Crossing: return 4;
    case NGraphVertexKind::Hexagonal: return 6;
  }
  fail("bad vertex kind");
}

int half_color(const NGraph& g, int h) { return g.edge_color[h / 2]; }

// Position of edge e in rot(v); throws if absent.
int slot_of_edge(const NGraph& g, int v, int e) {
  const auto& rot = g.vertices[v].rot;
  for (int p = 0; p < static_cast<int>(rot.size()); ++p)
    if (NGraph::edge_of(rot[p]) == e) return p;
  fail("edge not incident to vertex");
}

std::pair<int, int> edge_ends(const NGraph& g, int e) {
  return {g.half_edge_vertex[2 * e], g.half_edge_vertex[2 * e + 1]};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

NGraphBuilder::NGraphBuilder(int sheets) {
  if (sheets < 2) fail("builder needs at least 2 sheets");
  g_.sheets = sheets;
}

int NGraphBuilder::add_vertex(NGraphVertexKind kind) {
  g_.vertices.push_back(NGraphVertex{kind, {}, {}});
  pending_rot_.emplace_back();
  return static_cast<int>(g_.vertices.size()) - 1;
}

int NGraphBuilder::add_edge(int u, int v, int color) {
  const int n = static_cast<int>(g_.vertices.size());
  if (u < 0 || u >= n || v < 0 || v >= n) fail("edge endpoint out of range");
  if (color < 1 || color >= g_.sheets) fail("edge color out of range");
  g_.edge_color.push_back(color);
  g_.half_edge_vertex.push_back(u);
  g_.half_edge_vertex.push_back(v);
  return static_cast<int>(g_.edge_color.size()) - 1;
}

void NGraphBuilder::set_rotation(int v, std::vector<int> edge_ids) {
  if (v < 0 || v >= static_cast<int>(g_.vertices.size()))
    fail("rotation vertex out of range");
  pending_rot_[v] = std::move(edge_ids);
}

NGraph NGraphBuilder::build(std::vector<int> outer, std::vector<int> inner) {
  // Half-edges incident to each vertex, in edge order.
  std::vector<std::vector<int>> at(g_.vertices.size());
  for (int h = 0; h < 2 * g_.edge_count(); ++h)
    at[g_.half_edge_vertex[h]].push_back(h);

  for (int v = 0; v < static_cast<int>(g_.vertices.size()); ++v) {
    const auto& want = pending_rot_[v];
    if (want.empty()) {
      if (at[v].size() > 1) fail("vertex of degree > 1 without a rotation");
      g_.vertices[v].rot = at[v];
      continue;
    }
    if (want.size() != at[v].size()) fail("rotation length != vertex degree");
    std::vector<int> rot;
    std::vector<bool> used(2 * g_.edge_count(), false);
    for (int e : want) {
      if (e < 0 || e >= g_.edge_count()) fail("rotation edge out of range");
      int h = -1;
      for (int cand : {2 * e, 2 * e + 1})
        if (g_.half_edge_vertex[cand] == v && !used[cand]) {
          h = cand;
          break;
        }
      if (h < 0) fail("rotation lists an edge not incident (or too often)");
      used[h] = true;
      rot.push_back(h);
    }
    g_.vertices[v].rot = std::move(rot);
  }

  g_.outer_boundary = std::move(outer);
  g_.inner_boundary = std::move(inner);
  detail::recompute_vertex_colors(g_);
  validate(g_);
  return std::move(g_);
}

void detail::recompute_vertex_colors(NGraph& g) {
  for (auto& v : g.vertices) {
    v.colors.clear();
    if (v.kind == NGraphVertexKind::Boundary) continue;
    for (int h : v.rot) v.colors.push_back(half_color(g, h));
    std::sort(v.colors.begin(), v.colors.end());
    v.colors.erase(std::unique(v.colors.begin(), v.colors.end()),
                   v.colors.end());
  }
}

void validate(const NGraph& g) {
  const int nv = static_cast<int>(g.vertices.size());
  const int ne = g.edge_count();
  if (g.sheets < 2) fail("sheets < 2");
  if (static_cast<int>(g.half_edge_vertex.size()) != 2 * ne)
    fail("half_edge_vertex size mismatch");
  if (nv == 0) {
    if (ne != 0 || !g.outer_boundary.empty() || !g.inner_boundary.empty())
      fail("empty vertex set with edges or boundary");
    return;
  }

  for (int e = 0; e < ne; ++e)
    if (g.edge_color[e] < 1 || g.edge_color[e] >= g.sheets)
      fail("edge color out of range");
  for (int h = 0; h < 2 * ne; ++h)
    if (g.half_edge_vertex[h] < 0 || g.half_edge_vertex[h] >= nv)
      fail("half-edge endpoint out of range");

  // Rotations partition the half-edges.
  std::vector<int> seen(2 * ne, 0);
  for (int v = 0; v < nv; ++v) {
    const auto& vert = g.vertices[v];
    if (static_cast<int>(vert.rot.size()) != degree_of(vert.kind))
      fail("vertex degree does not match its kind");
    for (int h : vert.rot) {
      if (h < 0 || h >= 2 * ne) fail("rotation half-edge out of range");
      if (g.half_edge_vertex[h] != v) fail("rotation half-edge at wrong vertex");
      ++seen[h];
    }
  }
  for (int h = 0; h < 2 * ne; ++h)
    if (seen[h] != 1) fail("half-edge missing from rotations");

  // Kind-specific color rules and declared colors.
  for (int v = 0; v < nv; ++v) {
    const auto& vert = g.vertices[v];
    std::vector<int> cs;
    for (int h : vert.rot) cs.push_back(half_color(g, h));
    std::vector<int> distinct = cs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    switch (vert.kind) {
      case NGraphVertexKind::Boundary:
        if (!vert.colors.empty()) fail("boundary vertex with declared colors");
        break;
      case NGraphVertexKind::Trivalent:
        if (distinct.size() != 1) fail("trivalent vertex is not monochromatic");
        if (vert.colors != distinct) fail("vertex colors out of date");
        break;
      case NGraphVertexKind::Hexagonal: {
        if (distinct.size() != 2 || distinct[1] - distinct[0] != 1)
          fail("hexagonal vertex colors are not consecutive");
        for (int p = 0; p < 6; ++p)
          if (cs[p] == cs[(p + 1) % 6]) fail("hexagonal colors do not alternate");
        if (vert.colors != distinct) fail("vertex colors out of date");
        break;
      }
      case NGraphVertexKind::Crossing: {
        if (cs[0] != cs[2] || cs[1] != cs[3])
          fail("crossing opposite colors differ");
        if (std::abs(cs[0] - cs[1]) < 2) fail("crossing colors too close");
        if (vert.colors != distinct) fail("vertex colors out of date");
        break;
      }
    }
  }

  // Boundary circles: Boundary vertices exactly cover them, length >= 2.
  std::vector<int> circle_of(nv, -1);
  auto scan_circle = [&](const std::vector<int>& circle, int tag) {
    if (circle.empty()) return;
    if (circle.size() < 2) fail("boundary circle shorter than 2");
    for (int v : circle) {
      if (v < 0 || v >= nv) fail("boundary vertex out of range");
      if (g.vertices[v].kind != NGraphVertexKind::Boundary)
        fail("non-boundary vertex on a boundary circle");
      if (circle_of[v] != -1) fail("boundary vertex listed twice");
      circle_of[v] = tag;
    }
  };
  scan_circle(g.outer_boundary, 0);
  scan_circle(g.inner_boundary, 1);
  for (int v = 0; v < nv; ++v) {
    const bool is_b = g.vertices[v].kind == NGraphVertexKind::Boundary;
    if (is_b != (circle_of[v] != -1))
      fail("boundary kind and boundary membership disagree");
  }
  if (g.outer_boundary.empty() && !g.inner_boundary.empty())
    fail("inner boundary without outer boundary");
  if (g.outer_boundary.empty() && nv > 0) fail("graph without boundary");

  // Rim-augmented combinatorial map: faces via phi(h) = ccw-next of twin(h),
  // which traces the face to the right of each half-edge.
  const int base = 2 * ne;
  const int n_rim = static_cast<int>(g.outer_boundary.size()) +
                    static_cast<int>(g.inner_boundary.size());
  const int total = base + 2 * n_rim;
  std::vector<int> succ(total, -1);  // ccw successor at the vertex
  std::vector<int> vert_of(total, -1);
  for (int h = 0; h < base; ++h) vert_of[h] = g.half_edge_vertex[h];
  for (int v = 0; v < nv; ++v) {
    const auto& rot = g.vertices[v].rot;
    if (g.vertices[v].kind == NGraphVertexKind::Boundary) continue;
    const int d = static_cast<int>(rot.size());
    for (int p = 0; p < d; ++p) succ[rot[p]] = rot[(p + 1) % d];
  }
  // Rim edge j of a circle runs circle[j] -> circle[j+1]; its halves are
  // base+2r (at circle[j]) and base+2r+1 (at circle[j+1]).
  int r = 0;
  auto add_rim = [&](const std::vector<int>& circle, bool outer) {
    const int L = static_cast<int>(circle.size());
    if (L == 0) return;
    std::vector<int> next_h(L), prev_h(L);
    for (int j = 0; j < L; ++j) {
      next_h[j] = base + 2 * r;
      prev_h[(j + 1) % L] = base + 2 * r + 1;
      vert_of[base + 2 * r] = circle[j];
      vert_of[base + 2 * r + 1] = circle[(j + 1) % L];
      ++r;
    }
    for (int j = 0; j < L; ++j) {
      const int leg = g.vertices[circle[j]].rot[0];
      if (outer) {
        // ccw [rim-next, leg, rim-prev]
        succ[next_h[j]] = leg;
        succ[leg] = prev_h[j];
        succ[prev_h[j]] = next_h[j];
      } else {
        // ccw [rim-next, rim-prev, leg]
        succ[next_h[j]] = prev_h[j];
        succ[prev_h[j]] = leg;
        succ[leg] = next_h[j];
      }
    }
  };
  add_rim(g.outer_boundary, true);
  add_rim(g.inner_boundary, false);

  auto twin_aug = [&](int h) {
    return h < base ? (h ^ 1) : base + ((h - base) ^ 1);
  };

  // Connectivity of the augmented graph.
  {
    UnionFind uf(nv);
    for (int h = 0; h < total; h += 2) uf.unite(vert_of[h], vert_of[h + 1]);
    const int root = uf.find(0);
    for (int v = 1; v < nv; ++v)
      if (uf.find(v) != root) fail("graph is not connected");
  }

  // Face census and Euler count on the sphere.
  std::vector<int> face_of(total, -1);
  int faces = 0;
  for (int h0 = 0; h0 < total; ++h0) {
    if (face_of[h0] != -1) continue;
    int h = h0;
    do {
      if (face_of[h] != -1) fail("face tracing is not a permutation");
      face_of[h] = faces;
      h = succ[twin_aug(h)];
    } while (h != h0);
    ++faces;
  }
  const int euler = nv - (ne + n_rim) + faces;
  if (euler != 2) fail("rotation system is not planar");

  // Each circle must bound an all-rim face of its full length: the outer cap
  // is traced by the rim-next halves, the inner cap by the rim-prev halves.
  int rim_index = 0;
  auto check_cap = [&](const std::vector<int>& circle, bool outer) {
    const int L = static_cast<int>(circle.size());
    if (L == 0) return;
    std::set<int> expect;
    for (int j = 0; j < L; ++j)
      expect.insert(base + 2 * (rim_index + j) + (outer ? 0 : 1));
    const int f = face_of[*expect.begin()];
    std::set<int> got;
    for (int h = 0; h < total; ++h)
      if (face_of[h] == f) got.insert(h);
    if (got != expect) fail("boundary circle does not bound a clean cap");
    rim_index += L;
  };
  check_cap(g.outer_boundary, true);
  check_cap(g.inner_boundary, false);
}

namespace {

// Cycle edges grouped by vertex; checks ids and distinctness.
std::map<int, std::vector<int>> cycle_incidence(const NGraph& g,
                                                const std::vector<int>& edges) {
  if (edges.empty()) fail("cycle with no edges");
  std::set<int> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size()) fail("cycle repeats an edge");
  std::map<int, std::vector<int>> at;
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) fail("cycle edge out of range");
    auto [u, v] = edge_ends(g, e);
    at[u].push_back(e);
    at[v].push_back(e);
  }
  return at;
}

bool is_tree(const NGraph& g, const std::vector<int>& edges,
             const std::map<int, std::vector<int>>& at) {
  if (at.size() != edges.size() + 1) return false;
  std::map<int, int> index;
  for (const auto& [v, _] : at) index.emplace(v, static_cast<int>(index.size()));
  UnionFind uf(static_cast<int>(at.size()));
  for (int e : edges) {
    auto [u, v] = edge_ends(g, e);
    if (!uf.unite(index[u], index[v])) return false;
  }
  return true;
}

void check_straight(const NGraph& g, int v, int e1, int e2) {
  const auto& vert = g.vertices[v];
  const int p1 = slot_of_edge(g, v, e1);
  int p2 = -1;  // slot of e2 distinct from p1 (parallel edges allowed)
  for (int p = 0; p < static_cast<int>(vert.rot.size()); ++p)
    if (p != p1 && NGraph::edge_of(vert.rot[p]) == e2) p2 = p;
  if (p2 < 0) fail("cycle edge not incident to interior vertex");
  const int d = static_cast<int>(vert.rot.size());
  if ((p2 - p1 + d) % d != d / 2) fail("cycle does not pass straight through");
}

}  // namespace

void validate(const NGraph& g, const CycleSpec& cycle) {
  const auto at = cycle_incidence(g, cycle.edges);
  for (const auto& [v, _] : at)
    if (g.vertices[v].kind == NGraphVertexKind::Boundary)
      fail("cycle touches the boundary");

  switch (cycle.kind) {
    case CycleKind::I: {
      if (cycle.edges.size() != 1) fail("I-cycle must be a single edge");
      auto [u, v] = edge_ends(g, cycle.edges[0]);
      if (u == v) fail("I-cycle on a loop");
      if (g.vertices[u].kind != NGraphVertexKind::Trivalent ||
          g.vertices[v].kind != NGraphVertexKind::Trivalent)
        fail("I-cycle ends must be trivalent");
      break;
    }
    case CycleKind::LongI: {
      if (cycle.edges.size() < 2) fail("LongI needs at least two edges");
      if (!is_tree(g, cycle.edges, at)) fail("LongI edges do not form a path");
      int ends = 0;
      for (const auto& [v, es] : at) {
        const auto kind = g.vertices[v].kind;
        if (es.size() == 1) {
          ++ends;
          if (kind != NGraphVertexKind::Trivalent)
            fail("LongI ends must be trivalent");
        } else if (es.size() == 2) {
          if (kind == NGraphVertexKind::Trivalent)
            fail("LongI passes through a trivalent vertex");
          check_straight(g, v, es[0], es[1]);
          if (kind == NGraphVertexKind::Crossing &&
              g.edge_color[es[0]] != g.edge_color[es[1]])
            fail("LongI changes color at a crossing");
          if (kind == NGraphVertexKind::Hexagonal &&
              g.edge_color[es[0]] == g.edge_color[es[1]])
            fail("LongI keeps color through a hexagon");
        } else {
          fail("LongI branches");
        }
      }
      if (ends != 2) fail("LongI does not have two ends");
      break;
    }
    case CycleKind::YUpper:
    case CycleKind::YLower: {
      if (!is_tree(g, cycle.edges, at)) fail("Y-cycle edges do not form a tree");
      const int c = g.edge_color[cycle.edges[0]];
      for (int e : cycle.edges)
        if (g.edge_color[e] != c) fail("Y-cycle is not monochromatic");
      std::vector<int> pair;
      for (const auto& [v, es] : at) {
        const auto& vert = g.vertices[v];
        switch (vert.kind) {
          case NGraphVertexKind::Trivalent:
            if (es.size() != 1) fail("trivalent vertex interior to a Y-cycle");
            break;
          case NGraphVertexKind::Hexagonal: {
            int own = 0;
            for (int h : vert.rot)
              if (half_color(g, h) == c) ++own;
            if (static_cast<int>(es.size()) != own || own != 3)
              fail("Y-cycle must use all three same-color edges of a hexagon");
            if (pair.empty())
              pair = vert.colors;
            else if (pair != vert.colors)
              fail("Y-cycle hexagons carry different color pairs");
            break;
          }
          case NGraphVertexKind::Crossing:
            if (es.size() != 2) fail("Y-cycle branches at a crossing");
            check_straight(g, v, es[0], es[1]);
            break;
          case NGraphVertexKind::Boundary:
            fail("cycle touches the boundary");
        }
      }
      if (pair.empty()) fail("Y-cycle without a hexagon");
      const bool upper = pair[0] == c;  // pair is (c, c+1)
      if (upper != (cycle.kind == CycleKind::YUpper))
        fail("Y-cycle kind does not match its hexagon pair");
      break;
    }
  }
}

CycleKind infer_cycle_kind(const NGraph& g, const std::vector<int>& edges) {
  if (edges.size() == 1) return CycleKind::I;
  const auto at = cycle_incidence(g, edges);
  bool branched = false;
  for (const auto& [v, es] : at)
    if (es.size() >= 3) branched = true;
  if (!branched) return CycleKind::LongI;
  const int c = g.edge_color[edges[0]];
  for (const auto& [v, es] : at) {
    const auto& vert = g.vertices[v];
    if (vert.kind == NGraphVertexKind::Hexagonal)
      return vert.colors[0] == c ? CycleKind::YUpper : CycleKind::YLower;
  }
  fail("branched cycle without a hexagon");
}

NGraphWithCycles with_cycles(NGraph g, std::vector<CycleSpec> cycles) {
  validate(g);
  for (const auto& c : cycles) validate(g, c);
  NGraphWithCycles gb{std::move(g), std::move(cycles), {}};
  const int n = static_cast<int>(gb.cycles.size());
  gb.cycle_class.assign(n, 0);
  try {
    const IntMatrix q = quiver_from_cycles(gb.g, gb.cycles);
    for (int i = 0; i < n; ++i) {
      bool out = false, in = false;
      for (int j = 0; j < n; ++j) {
        if (q[i][j] > 0) out = true;
        if (q[i][j] < 0) in = true;
      }
      gb.cycle_class[i] = (in && out) ? 0 : (in ? -1 : +1);
    }
  } catch (const std::invalid_argument&) {
    // Pairing undefined (shared hexagon): leave every class at 0.
  }
  return gb;
}

std::vector<int> boundary_word(const NGraph& g) {
  std::vector<int> w;
  for (int v : g.outer_boundary)
    w.push_back(half_color(g, g.vertices[v].rot[0]));
  return w;
}

std::pair<std::vector<int>, std::vector<int>> boundary_words_annulus(
    const AnnularNGraph& g) {
  std::vector<int> inner;
  for (int v : g.inner_boundary)
    inner.push_back(half_color(g, g.vertices[v].rot[0]));
  return {boundary_word(g), inner};
}

long long intersection_number(const NGraph& g, const CycleSpec& a,
                              const CycleSpec& b) {
  const auto at_a = cycle_incidence(g, a.edges);
  const auto at_b = cycle_incidence(g, b.edges);
  long long total = 0;
  // A cycle passes a hexagon as a chord when it has exactly two edges there,
  // at opposite rot slots; the slot pair is well defined mod 3.
  const auto chord_slot = [&](int v, const std::vector<int>& es) {
    if (es.size() != 2)
      fail("cycles share a hexagonal vertex; pairing undefined");
    const int p0 = slot_of_edge(g, v, es[0]);
    const int p1 = slot_of_edge(g, v, es[1]);
    if ((p1 - p0 + 6) % 6 != 3)
      fail("cycles share a hexagonal vertex; pairing undefined");
    return p0 % 3;
  };
  for (const auto& [v, ea] : at_a) {
    const auto it = at_b.find(v);
    if (it == at_b.end()) continue;
    const auto& vert = g.vertices[v];
    if (vert.kind == NGraphVertexKind::Hexagonal) {
      const int p = chord_slot(v, ea);
      const int q = chord_slot(v, it->second);
      if (p == q) continue;  // same chord: shared edges, no crossing
      total += (q - p + 3) % 3 == 1 ? 1 : -1;
      continue;
    }
    if (vert.kind != NGraphVertexKind::Trivalent) continue;
    if (ea.size() != 1 || it->second.size() != 1)
      fail("cycle has several edges at a shared trivalent vertex");
    if (ea[0] == it->second[0]) continue;
    const int s = slot_of_edge(g, v, ea[0]);
    const int sp = slot_of_edge(g, v, it->second[0]);
    const int d = (sp - s + 3) % 3;
    total += d == 2 ? 1 : -1;
  }
  return total;
}

IntMatrix quiver_from_cycles(const NGraph& g,
                             const std::vector<CycleSpec>& cycles) {
  const int n = static_cast<int>(cycles.size());
  IntMatrix q(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const long long x = intersection_number(g, cycles[i], cycles[j]);
      q[i][j] = x;
      q[j][i] = -x;
    }
  return q;
}

namespace {

struct IsoState {
  std::vector<int> vmap, vused;  // a-vertex -> b-vertex; b-vertex taken
  std::vector<int> hmap, hused;
};

// Forced propagation of half-edge pairs; returns false on any conflict.
bool propagate(const NGraph& a, const NGraph& b, IsoState& st,
               std::vector<std::pair<int, int>> work) {
  while (!work.empty()) {
    auto [h, hp] = work.back();
    work.pop_back();
    if (st.hmap[h] != -1) {
      if (st.hmap[h] != hp) return false;
      continue;
    }
    if (st.hused[hp]) return false;
    if (a.edge_color[h / 2] != b.edge_color[hp / 2]) return false;
    st.hmap[h] = hp;
    st.hused[hp] = 1;
    work.emplace_back(h ^ 1, hp ^ 1);
    const int u = a.half_edge_vertex[h];
    const int up = b.half_edge_vertex[hp];
    if (st.vmap[u] != -1) {
      if (st.vmap[u] != up) return false;
      continue;
    }
    if (st.vused[up]) return false;
    const auto& va = a.vertices[u];
    const auto& vb = b.vertices[up];
    if (va.kind != vb.kind || va.colors != vb.colors ||
        va.rot.size() != vb.rot.size())
      return false;
    st.vmap[u] = up;
    st.vused[up] = 1;
    const int d = static_cast<int>(va.rot.size());
    int p = -1, pp = -1;
    for (int t = 0; t < d; ++t) {
      if (va.rot[t] == h) p = t;
      if (vb.rot[t] == hp) pp = t;
    }
    for (int t = 1; t < d; ++t)
      work.emplace_back(va.rot[(p + t) % d], vb.rot[(pp + t) % d]);
  }
  return true;
}

std::optional<IsoState> try_isomorphism(const NGraph& a, const NGraph& b,
                                        int offset) {
  if (a.sheets != b.sheets || a.vertices.size() != b.vertices.size() ||
      a.edge_count() != b.edge_count() ||
      a.outer_boundary.size() != b.outer_boundary.size() ||
      a.inner_boundary.size() != b.inner_boundary.size())
    return std::nullopt;
  const int Lo = static_cast<int>(a.outer_boundary.size());
  if (a.vertices.empty()) {
    if (b.vertices.empty()) return IsoState{};
    return std::nullopt;
  }
  if (Lo == 0) return std::nullopt;

  IsoState st;
  st.vmap.assign(a.vertices.size(), -1);
  st.vused.assign(b.vertices.size(), 0);
  st.hmap.assign(2 * a.edge_count(), -1);
  st.hused.assign(2 * b.edge_count(), 0);

  std::vector<std::pair<int, int>> seed;
  for (int i = 0; i < Lo; ++i) {
    const int u = a.outer_boundary[i];
    const int up = b.outer_boundary[((i + offset) % Lo + Lo) % Lo];
    seed.emplace_back(a.vertices[u].rot[0], b.vertices[up].rot[0]);
  }
  if (!propagate(a, b, st, seed)) return std::nullopt;

  const int Li = static_cast<int>(a.inner_boundary.size());
  auto complete = [&](const IsoState& s) {
    for (int m : s.hmap)
      if (m == -1) return false;
    for (int m : s.vmap)
      if (m == -1) return false;
    return true;
  };
  auto inner_ok = [&](const IsoState& s) {
    if (Li == 0) return true;
    std::vector<int> pos(b.vertices.size(), -1);
    for (int j = 0; j < Li; ++j) pos[b.inner_boundary[j]] = j;
    int shift = -1;
    for (int i = 0; i < Li; ++i) {
      const int m = s.vmap[a.inner_boundary[i]];
      if (m == -1 || pos[m] == -1) return false;
      const int sh = (pos[m] - i + Li) % Li;
      if (shift == -1) shift = sh;
      if (sh != shift) return false;
    }
    return true;
  };

  if (complete(st)) return inner_ok(st) ? std::optional<IsoState>(st)
                                        : std::nullopt;
  // Components touching only the inner circle: pin the inner offset.
  for (int o2 = 0; o2 < std::max(Li, 1); ++o2) {
    IsoState trial = st;
    std::vector<std::pair<int, int>> seeds2;
    bool consistent = true;
    for (int i = 0; i < Li; ++i) {
      const int u = a.inner_boundary[i];
      const int up = b.inner_boundary[(i + o2) % Li];
      if (trial.vmap[u] != -1 && trial.vmap[u] != up) consistent = false;
      seeds2.emplace_back(a.vertices[u].rot[0], b.vertices[up].rot[0]);
    }
    if (!consistent) continue;
    if (propagate(a, b, trial, seeds2) && complete(trial) && inner_ok(trial))
      return trial;
  }
  return std::nullopt;
}

}  // namespace

bool isomorphic_at_offset(const NGraph& a, const NGraph& b, int offset) {
  return try_isomorphism(a, b, offset).has_value();
}

bool isomorphic(const NGraph& a, const NGraph& b) {
  const int L = static_cast<int>(a.outer_boundary.size());
  if (L == 0) return try_isomorphism(a, b, 0).has_value();
  for (int o = 0; o < L; ++o)
    if (try_isomorphism(a, b, o)) return true;
  return false;
}

namespace {

bool cycles_match(const NGraphWithCycles& a, const NGraphWithCycles& b,
                  const IsoState& st, const std::vector<int>& perm) {
  const int n = static_cast<int>(a.cycles.size());
  if (static_cast<int>(b.cycles.size()) != n ||
      static_cast<int>(perm.size()) != n)
    return false;
  std::vector<int> hit(n, 0);
  for (int k = 0; k < n; ++k) {
    if (perm[k] < 0 || perm[k] >= n || hit[perm[k]]++) return false;
    if (a.cycles[k].kind != b.cycles[perm[k]].kind) return false;
    std::set<int> img, want(b.cycles[perm[k]].edges.begin(),
                            b.cycles[perm[k]].edges.end());
    for (int e : a.cycles[k].edges) img.insert(st.hmap[2 * e] / 2);
    if (img != want) return false;
  }
  return true;
}

}  // namespace

bool isomorphic_at_offset(const NGraphWithCycles& a, const NGraphWithCycles& b,
                          int offset, const std::vector<int>& perm) {
  const auto st = try_isomorphism(a.g, b.g, offset);
  return st && cycles_match(a, b, *st, perm);
}

bool isomorphic(const NGraphWithCycles& a, const NGraphWithCycles& b,
                const std::vector<int>& perm) {
  const int L = static_cast<int>(a.g.outer_boundary.size());
  for (int o = 0; o < std::max(L, 1); ++o) {
    const auto st = try_isomorphism(a.g, b.g, o);
    if (st && cycles_match(a, b, *st, perm)) return true;
  }
  return false;
}

NGraph conjugate(NGraph g) {
  for (auto& c : g.edge_color) c = g.sheets - c;
  for (auto& v : g.vertices) {
    for (auto& c : v.colors) c = g.sheets - c;
    std::sort(v.colors.begin(), v.colors.end());
  }
  return g;
}

NGraphWithCycles conjugate(NGraphWithCycles gb) {
  gb.g = conjugate(std::move(gb.g));
  for (auto& c : gb.cycles) {
    if (c.kind == CycleKind::YUpper)
      c.kind = CycleKind::YLower;
    else if (c.kind == CycleKind::YLower)
      c.kind = CycleKind::YUpper;
  }
  return gb;
}

NGraph rotate(NGraph g, int s) {
  if (!g.inner_boundary.empty()) fail("rotate is defined on disks only");
  const int L = static_cast<int>(g.outer_boundary.size());
  if (L == 0) return g;
  std::vector<int> outer(L);
  for (int i = 0; i < L; ++i) outer[i] = g.outer_boundary[((i + s) % L + L) % L];
  g.outer_boundary = std::move(outer);
  return g;
}

NGraphWithCycles rotate(NGraphWithCycles gb, int s) {
  gb.g = rotate(std::move(gb.g), s);
  return gb;
}

bool is_invariant(const NGraphWithCycles& gb, int steps,
                  const std::vector<int>& cycle_perm) {
  return isomorphic_at_offset(gb, gb, steps, cycle_perm);
}

bool is_free_sufficient(const NGraph& g) {
  for (int c = 1; c < g.sheets; ++c) {
    UnionFind uf(static_cast<int>(g.vertices.size()));
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.edge_color[e] != c) continue;
      auto [u, v] = edge_ends(g, e);
      if (!uf.unite(u, v)) return false;
    }
  }
  return true;
}

std::vector<int> detail::remove_edges(NGraph& g, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<int> remap(g.edge_count(), -1);
  int next = 0;
  std::size_t k = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (k < edges.size() && edges[k] == e) {
      ++k;
      continue;
    }
    remap[e] = next++;
  }
  std::vector<int> color(next), hev(2 * next);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (remap[e] == -1) continue;
    color[remap[e]] = g.edge_color[e];
    hev[2 * remap[e]] = g.half_edge_vertex[2 * e];
    hev[2 * remap[e] + 1] = g.half_edge_vertex[2 * e + 1];
  }
  g.edge_color = std::move(color);
  g.half_edge_vertex = std::move(hev);
  for (auto& v : g.vertices) {
    std::vector<int> rot;
    for (int h : v.rot)
      if (remap[h / 2] != -1) rot.push_back(2 * remap[h / 2] + (h & 1));
    v.rot = std::move(rot);
  }
  return remap;
}

std::vector<int> detail::remove_vertices(NGraph& g,
                                         std::vector<int> vertex_ids) {
  std::sort(vertex_ids.begin(), vertex_ids.end());
  vertex_ids.erase(std::unique(vertex_ids.begin(), vertex_ids.end()),
                   vertex_ids.end());
  std::vector<int> remap(g.vertices.size(), -1);
  int next = 0;
  std::size_t k = 0;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    if (k < vertex_ids.size() && vertex_ids[k] == v) {
      ++k;
      continue;
    }
    remap[v] = next++;
  }
  std::vector<NGraphVertex> verts(next);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    if (remap[v] != -1) verts[remap[v]] = std::move(g.vertices[v]);
  g.vertices = std::move(verts);
  for (auto& v : g.half_edge_vertex) {
    if (remap[v] == -1)
      throw std::logic_error("ngraph: removing a vertex with live edges");
    v = remap[v];
  }
  auto fix = [&](std::vector<int>& circle) {
    std::vector<int> out;
    for (int v : circle)
      if (remap[v] != -1) out.push_back(remap[v]);
    circle = std::move(out);
  };
  fix(g.outer_boundary);
  fix(g.inner_boundary);
  return remap;
}

}  // namespace weaveclust
