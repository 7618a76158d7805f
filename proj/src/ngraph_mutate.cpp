#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weaveclust/ngraph.hpp"

namespace weaveclust {

namespace {

[[noreturn]] void unsupported(const std::string& what) {
  throw std::invalid_argument("ngraph: unsupported configuration: " + what);
}

int far_of_half(const NGraph& g, int h) {
  return g.half_edge_vertex[NGraph::twin(h)];
}

// Half-edge of e in rot(v); the incidence must already be established.
int half_at(const NGraph& g, int v, int e) {
  for (int h : g.vertices[v].rot)
    if (NGraph::edge_of(h) == e) return h;
  throw std::logic_error("ngraph: edge not in its vertex rotation");
}

// rot(v) rotated to start at half-edge h.
std::vector<int> cyclic_from(const NGraph& g, int v, int h) {
  const auto& rot = g.vertices[v].rot;
  const int n = static_cast<int>(rot.size());
  for (int p = 0; p < n; ++p)
    if (rot[p] == h) {
      std::vector<int> out(n);
      for (int i = 0; i < n; ++i) out[i] = rot[(p + i) % n];
      return out;
    }
  throw std::logic_error("ngraph: half-edge not in its vertex rotation");
}

std::map<int, std::vector<int>> edges_by_vertex(const NGraph& g,
                                                const std::vector<int>& edges) {
  std::map<int, std::vector<int>> at;
  for (int e : edges) {
    at[g.half_edge_vertex[2 * e]].push_back(e);
    at[g.half_edge_vertex[2 * e + 1]].push_back(e);
  }
  return at;
}

bool has_edge(const std::vector<int>& set, int e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

// --- I-cycle rewiring -------------------------------------------------------

// With rot(v1) = [e, a, b] and rot(v2) = [e, c, d] counterclockwise from e,
// the mutation swaps the outermost legs across the edge: rot(v1) becomes
// [e, d, a] and rot(v2) becomes [e, b, c]. Edge ids are untouched, so every
// bystander cycle keeps its edge set.
void i_rewrite(NGraph& g, int e) {
  const int v1 = g.half_edge_vertex[2 * e];
  const int v2 = g.half_edge_vertex[2 * e + 1];
  const auto r1 = cyclic_from(g, v1, 2 * e);
  const auto r2 = cyclic_from(g, v2, 2 * e + 1);
  const int a = r1[1], b = r1[2], c = r2[1], d = r2[2];
  std::set<int> legs{NGraph::edge_of(a), NGraph::edge_of(b),
                     NGraph::edge_of(c), NGraph::edge_of(d)};
  if (legs.size() != 4 || legs.count(e))
    unsupported("I-mutation at a multiple edge");
  g.vertices[v1].rot = {2 * e, d, a};
  g.vertices[v2].rot = {2 * e + 1, b, c};
  g.half_edge_vertex[d] = v1;
  g.half_edge_vertex[b] = v2;
}

// --- Long I: push an end through the adjacent hexagon ------------------------

constexpr int kArc = -2, kS1 = -3, kS2 = -4;  // placeholders for new edges

// End trivalent vertex P of the mutated path, its path edge m, and the
// hexagon H across m. The move deletes m, turns P and H into the two
// hexagons of a split gadget joined by vert/arc, and adds a trivalent S
// carrying the shortened path end:
//
//   rot(P) <- [d2, q2, a, arc, vert, s1]     (a, b are P's other legs)
//   rot(H) <- [d1, s2, vert, arc, b, q1]     (H was [m, q1, d1, qop, d2, q2])
//   rot(S) <- [qop, s1, s2]
//
// Through-passages afterwards: q1-vert-q2, d1-arc-d2, a-s1, b-s2, and the
// path continues from S along qop. Returns false without touching anything
// when the pattern or a bystander transport does not match.
bool try_push(NGraph& g, std::vector<std::vector<int>>& sets, int k, int P,
              int m) {
  const int hm = half_at(g, P, m);
  const int H = far_of_half(g, hm);
  if (g.vertices[H].kind != NGraphVertexKind::Hexagonal) return false;
  const auto rp = cyclic_from(g, P, hm);
  const int ha = rp[1], hb = rp[2];
  const auto rh = cyclic_from(g, H, NGraph::twin(hm));
  const int hq1 = rh[1], hd1 = rh[2], hqop = rh[3], hd2 = rh[4], hq2 = rh[5];
  const int ea = NGraph::edge_of(ha), eb = NGraph::edge_of(hb);
  const int q1 = NGraph::edge_of(hq1), d1 = NGraph::edge_of(hd1),
            qop = NGraph::edge_of(hqop), d2 = NGraph::edge_of(hd2),
            q2 = NGraph::edge_of(hq2);
  const std::set<int> gadget{m, q1, d1, qop, d2, q2, ea, eb};
  if (gadget.size() != 8) return false;
  if (!has_edge(sets[k], qop)) return false;
  const std::vector<int> hexset{m, q1, d1, qop, d2, q2};

  std::vector<std::vector<int>> moved(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& del = sets[i];
    std::vector<int> out;
    if (has_edge(del, m) && has_edge(del, qop)) {
      for (int e : del)
        if (e != m) out.push_back(e);
    } else if (has_edge(del, m) && has_edge(del, d1) && has_edge(del, d2)) {
      for (int e : del)
        if (e != m) out.push_back(e);
      out.push_back(kArc);
    } else {
      for (int e : hexset)
        if (has_edge(del, e)) return false;
      out = del;
      if (has_edge(del, ea)) out.push_back(kS1);
      if (has_edge(del, eb)) out.push_back(kS2);
    }
    moved[i] = std::move(out);
  }

  const int x = g.edge_color[m], y = g.edge_color[qop];
  const auto remap = detail::remove_edges(g, {m});
  const auto mh = [&](int h) { return 2 * remap[h / 2] + (h & 1); };
  const int E = g.edge_count();
  const int S = static_cast<int>(g.vertices.size());
  g.vertices.push_back({NGraphVertexKind::Trivalent, {}, {}});
  g.edge_color.insert(g.edge_color.end(), {x, y, y, y});
  g.half_edge_vertex.insert(g.half_edge_vertex.end(),
                            {P, H, P, H, P, S, H, S});
  auto& vp = g.vertices[P];
  vp.kind = NGraphVertexKind::Hexagonal;
  vp.rot = {mh(hd2), mh(hq2), mh(ha), 2 * (E + 1), 2 * E, 2 * (E + 2)};
  auto& vh = g.vertices[H];
  vh.kind = NGraphVertexKind::Hexagonal;
  vh.rot = {mh(hd1), 2 * (E + 3), 2 * E + 1, 2 * (E + 1) + 1, mh(hb), mh(hq1)};
  g.vertices[S].rot = {mh(hqop), 2 * (E + 2) + 1, 2 * (E + 3) + 1};
  g.half_edge_vertex[mh(hd2)] = P;
  g.half_edge_vertex[mh(hq2)] = P;
  g.half_edge_vertex[mh(hb)] = H;
  g.half_edge_vertex[mh(hqop)] = S;
  detail::recompute_vertex_colors(g);

  for (auto& del : moved)
    for (int& e : del) {
      if (e == kArc)
        e = E + 1;
      else if (e == kS1)
        e = E + 2;
      else if (e == kS2)
        e = E + 3;
      else
        e = remap[e];
      if (e < 0) throw std::logic_error("ngraph: transported a removed edge");
    }
  sets = std::move(moved);
  return true;
}

void longi_mutate(NGraph& g, std::vector<std::vector<int>>& sets, int k) {
  while (sets[k].size() > 1) {
    const auto at = edges_by_vertex(g, sets[k]);
    std::vector<std::pair<int, int>> ends;
    for (const auto& [v, es] : at)
      if (es.size() == 1 && g.vertices[v].kind == NGraphVertexKind::Trivalent)
        ends.emplace_back(v, es[0]);
    if (ends.size() != 2)
      throw std::logic_error("ngraph: long I-cycle lost its ends");
    std::sort(ends.begin(), ends.end());
    bool pushed = false;
    for (const auto& [v, e] : ends)
      if (try_push(g, sets, k, v, e)) {
        pushed = true;
        break;
      }
    if (!pushed) unsupported("long I-cycle cannot be pushed at either end");
  }
  i_rewrite(g, sets[k][0]);
}

// --- Y-cycle flower -----------------------------------------------------------

struct FlowerFrame {
  int O = -1;      // center hexagon
  int yh[3] = {};  // halves of the tree edges at O, counterclockwise
  int rh[3] = {};  // halves of the in-between edges at O, counterclockwise
  int T[3] = {};   // leaves; T[i] across yh[i]
};

// Matches gamma as a one-hexagon Y: three edges meeting at a hexagon, three
// distinct trivalent leaves.
bool match_simple_y(const NGraph& g, const std::vector<int>& gamma,
                    FlowerFrame& f) {
  if (gamma.size() != 3) return false;
  const auto at = edges_by_vertex(g, gamma);
  f.O = -1;
  int leaves = 0;
  for (const auto& [v, es] : at) {
    if (es.size() == 3) {
      if (g.vertices[v].kind != NGraphVertexKind::Hexagonal) return false;
      f.O = v;
    } else if (es.size() == 1 &&
               g.vertices[v].kind == NGraphVertexKind::Trivalent) {
      ++leaves;
    } else {
      return false;
    }
  }
  if (f.O < 0 || leaves != 3) return false;
  const auto ro = cyclic_from(g, f.O, half_at(g, f.O, gamma[0]));
  for (int i = 0; i < 3; ++i) {
    f.yh[i] = ro[2 * i];
    f.rh[i] = ro[2 * i + 1];
    if (!has_edge(gamma, NGraph::edge_of(f.yh[i]))) return false;
    if (has_edge(gamma, NGraph::edge_of(f.rh[i]))) return false;
    f.T[i] = far_of_half(g, f.yh[i]);
  }
  return true;
}

// Inverse flower: collapses the three ring hexagons back onto the center.
// The pattern is exactly the forward output, anchored at the mutated Y:
//
//   rot(T_i) = [g_i, P_i, Q_i]   with P_i to H_{i-1}, Q_i to H_i
//   rot(H_i) = [Q_i, X1, X2, X3, P_{i+1}, o_i]  counterclockwise
//
// Afterwards X1 returns to T_i, X2 to the center (replacing o_i), X3 to
// T_{i+1}; the rings and the o-edges are erased with the three hexagons.
bool try_reverse(NGraph& g, std::vector<std::vector<int>>& sets, int k) {
  FlowerFrame f;
  if (!match_simple_y(g, sets[k], f)) return false;
  int Ph[3], Qh[3], Hx[3];
  std::set<int> fl{f.O, f.T[0], f.T[1], f.T[2]};
  for (int i = 0; i < 3; ++i) {
    const auto rt = cyclic_from(g, f.T[i], NGraph::twin(f.yh[i]));
    Ph[i] = rt[1];
    Qh[i] = rt[2];
    Hx[i] = far_of_half(g, Qh[i]);
    if (g.vertices[Hx[i]].kind != NGraphVertexKind::Hexagonal) return false;
    if (fl.count(Hx[i])) return false;
    fl.insert(Hx[i]);
  }
  for (int i = 0; i < 3; ++i)
    if (far_of_half(g, Ph[i]) != Hx[(i + 2) % 3]) return false;
  int X1h[3], X2h[3], X3h[3];
  for (int i = 0; i < 3; ++i) {
    const auto rhx = cyclic_from(g, Hx[i], NGraph::twin(Qh[i]));
    X1h[i] = rhx[1];
    X2h[i] = rhx[2];
    X3h[i] = rhx[3];
    if (NGraph::edge_of(rhx[4]) != NGraph::edge_of(Ph[(i + 1) % 3]))
      return false;
    if (NGraph::edge_of(rhx[5]) != NGraph::edge_of(f.rh[i])) return false;
    if (fl.count(far_of_half(g, X1h[i])) || fl.count(far_of_half(g, X2h[i])) ||
        fl.count(far_of_half(g, X3h[i])))
      return false;
  }
  std::set<int> eset, rings, avoid;
  for (int i = 0; i < 3; ++i) {
    eset.insert(NGraph::edge_of(f.yh[i]));
    eset.insert(NGraph::edge_of(f.rh[i]));
    eset.insert(NGraph::edge_of(Ph[i]));
    eset.insert(NGraph::edge_of(Qh[i]));
    rings.insert(NGraph::edge_of(Ph[i]));
    rings.insert(NGraph::edge_of(Qh[i]));
    avoid.insert(NGraph::edge_of(f.yh[i]));
    avoid.insert(NGraph::edge_of(f.rh[i]));
  }
  if (eset.size() != 12) return false;

  std::vector<std::vector<int>> moved(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (static_cast<int>(j) == k) {
      moved[j] = sets[j];
      continue;
    }
    std::vector<int> out;
    for (int e : sets[j]) {
      if (avoid.count(e)) return false;
      if (!rings.count(e)) out.push_back(e);
    }
    if (out.empty()) return false;
    moved[j] = std::move(out);
  }

  const int t = g.edge_color[NGraph::edge_of(f.rh[0])];
  for (int i = 0; i < 3; ++i) g.edge_color[NGraph::edge_of(f.yh[i])] = t;
  for (int i = 0; i < 3; ++i) {
    g.vertices[f.T[i]].rot = {NGraph::twin(f.yh[i]), X3h[(i + 2) % 3], X1h[i]};
    g.half_edge_vertex[X1h[i]] = f.T[i];
    g.half_edge_vertex[X3h[i]] = f.T[(i + 1) % 3];
    g.half_edge_vertex[X2h[i]] = f.O;
  }
  for (int& h : g.vertices[f.O].rot)
    for (int i = 0; i < 3; ++i)
      if (h == f.rh[i]) h = X2h[i];
  for (int i = 0; i < 3; ++i) g.vertices[Hx[i]].rot.clear();
  std::vector<int> dead(rings.begin(), rings.end());
  for (int i = 0; i < 3; ++i) dead.push_back(NGraph::edge_of(f.rh[i]));
  const auto remap = detail::remove_edges(g, std::move(dead));
  for (auto& del : moved)
    for (int& e : del) {
      e = remap[e];
      if (e < 0) throw std::logic_error("ngraph: transported a removed edge");
    }
  detail::remove_vertices(g, {Hx[0], Hx[1], Hx[2]});
  detail::recompute_vertex_colors(g);
  sets = std::move(moved);
  return true;
}

// Forward flower: blows each leaf up into a ring hexagon around the center.
// rot(T_i) becomes [ringA_i, g_i, ringB_i]; the new hexagon H_i collects
// ringA_i, the legs B_i, r_i, A_{i+1} (in counterclockwise order), then
// ringB_{i+1} and the new spoke o_i back to the center. The tree edges take
// the other color of the center pair, so the mutated Y flips kind.
void forward_flower(NGraph& g, std::vector<std::vector<int>>& sets, int k) {
  FlowerFrame f;
  if (!match_simple_y(g, sets[k], f))
    unsupported("Y-mutation beyond a single-hexagon tree");
  int Ah[3], Bh[3];
  const std::set<int> flower{f.O, f.T[0], f.T[1], f.T[2]};
  for (int i = 0; i < 3; ++i) {
    const auto rt = cyclic_from(g, f.T[i], NGraph::twin(f.yh[i]));
    Ah[i] = rt[1];
    Bh[i] = rt[2];
  }
  for (int i = 0; i < 3; ++i)
    if (flower.count(far_of_half(g, f.rh[i])) ||
        flower.count(far_of_half(g, Ah[i])) ||
        flower.count(far_of_half(g, Bh[i])))
      unsupported("flower legs return to the mutated Y");

  const int V0 = static_cast<int>(g.vertices.size());
  const int E0 = g.edge_count();
  const auto ringA = [&](int i) { return E0 + 3 + 2 * i; };
  const auto ringB = [&](int i) { return E0 + 4 + 2 * i; };
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (static_cast<int>(j) == k) continue;
    auto& del = sets[j];
    for (int i = 0; i < 3; ++i)
      if (has_edge(del, NGraph::edge_of(f.yh[i])) ||
          has_edge(del, NGraph::edge_of(f.rh[i])))
        unsupported("cycle passes through the mutated hexagon");
    std::vector<int> add;
    for (int i = 0; i < 3; ++i) {
      if (has_edge(del, NGraph::edge_of(Ah[i])))
        add.push_back(ringA((i + 2) % 3));
      if (has_edge(del, NGraph::edge_of(Bh[i])))
        add.push_back(ringB((i + 1) % 3));
    }
    del.insert(del.end(), add.begin(), add.end());
  }

  const int t = g.edge_color[NGraph::edge_of(f.yh[0])];
  const int u = g.edge_color[NGraph::edge_of(f.rh[0])];
  for (int i = 0; i < 3; ++i)
    g.vertices.push_back({NGraphVertexKind::Hexagonal, {}, {}});
  for (int i = 0; i < 3; ++i) {
    g.edge_color.push_back(t);  // spoke o_i = E0+i between O and H_i
    g.half_edge_vertex.insert(g.half_edge_vertex.end(), {f.O, V0 + i});
  }
  for (int i = 0; i < 3; ++i) {
    g.edge_color.push_back(u);  // ringA_i: T_i to H_i
    g.half_edge_vertex.insert(g.half_edge_vertex.end(), {f.T[i], V0 + i});
    g.edge_color.push_back(u);  // ringB_i: T_i to H_{i-1}
    g.half_edge_vertex.insert(g.half_edge_vertex.end(),
                              {f.T[i], V0 + (i + 2) % 3});
  }
  for (int i = 0; i < 3; ++i) g.edge_color[NGraph::edge_of(f.yh[i])] = u;
  for (int& h : g.vertices[f.O].rot)
    for (int i = 0; i < 3; ++i)
      if (h == f.rh[i]) h = 2 * (E0 + i);
  for (int i = 0; i < 3; ++i) {
    g.vertices[f.T[i]].rot = {2 * ringA(i), NGraph::twin(f.yh[i]),
                              2 * ringB(i)};
    g.vertices[V0 + i].rot = {2 * ringA(i) + 1,       Bh[i], f.rh[i],
                              Ah[(i + 1) % 3],        2 * ringB((i + 1) % 3) + 1,
                              2 * (E0 + i) + 1};
    g.half_edge_vertex[Bh[i]] = V0 + i;
    g.half_edge_vertex[f.rh[i]] = V0 + i;
    g.half_edge_vertex[Ah[(i + 1) % 3]] = V0 + i;
  }
  detail::recompute_vertex_colors(g);
}

void y_mutate(NGraph& g, std::vector<std::vector<int>>& sets, int k) {
  if (try_reverse(g, sets, k)) return;
  forward_flower(g, sets, k);
}

}  // namespace

NGraphWithCycles mutate(const NGraphWithCycles& gb, int k) {
  const int n = static_cast<int>(gb.cycles.size());
  if (k < 0 || k >= n)
    throw std::invalid_argument("ngraph: cycle index out of range");
  NGraph g = gb.g;
  std::vector<std::vector<int>> sets;
  sets.reserve(gb.cycles.size());
  for (const auto& c : gb.cycles) sets.push_back(c.edges);
  switch (gb.cycles[k].kind) {
    case CycleKind::I:
      i_rewrite(g, sets[k].at(0));
      break;
    case CycleKind::LongI:
      longi_mutate(g, sets, k);
      break;
    case CycleKind::YUpper:
    case CycleKind::YLower:
      y_mutate(g, sets, k);
      break;
  }
  try {
    validate(g);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(
        std::string("ngraph: rewrite produced an invalid graph: ") + e.what());
  }
  if (boundary_words_annulus(g) != boundary_words_annulus(gb.g))
    throw std::logic_error("ngraph: mutation changed the boundary word");
  std::vector<CycleSpec> cycles(n);
  for (int i = 0; i < n; ++i) {
    auto& s = sets[i];
    std::sort(s.begin(), s.end());
    try {
      cycles[i].kind = infer_cycle_kind(g, s);
      cycles[i].edges = s;
      validate(g, cycles[i]);
    } catch (const std::invalid_argument& e) {
      unsupported(std::string("transported cycle is invalid: ") + e.what());
    }
  }
  return with_cycles(std::move(g), std::move(cycles));
}

NGraphWithCycles legendrian_coxeter_mutation(const NGraphWithCycles& gb,
                                             bool inverse) {
  const int n = static_cast<int>(gb.cycles.size());
  for (int c : gb.cycle_class)
    if (c == 0)
      throw std::invalid_argument(
          "ngraph: Coxeter mutation needs every cycle to be a source or a "
          "sink");
  std::vector<std::set<int>> touch(n);
  for (int i = 0; i < n; ++i)
    for (int e : gb.cycles[i].edges) {
      touch[i].insert(gb.g.half_edge_vertex[2 * e]);
      touch[i].insert(gb.g.half_edge_vertex[2 * e + 1]);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (gb.cycle_class[i] != gb.cycle_class[j]) continue;
      for (int v : touch[i])
        if (touch[j].count(v))
          throw std::invalid_argument(
              "ngraph: same-class cycles share a vertex");
    }
  NGraphWithCycles cur = gb;
  for (int pass = 0; pass < 2; ++pass) {
    const int want = (pass == 0) != inverse ? -1 : +1;
    for (int i = 0; i < n; ++i)
      if (gb.cycle_class[i] == want) cur = mutate(cur, i);
  }
  return cur;
}

}  // namespace weaveclust
