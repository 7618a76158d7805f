#include "weaveclust/folding.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace weaveclust {

void validate(const GroupAction& a) {
  for (const auto& g : a.gens) {
    if ((int)g.size() != a.degree) throw std::invalid_argument("group action: generator size");
    std::vector<bool> seen(a.degree, false);
    for (int v : g) {
      if (v < 0 || v >= a.degree || seen[v])
        throw std::invalid_argument("group action: generator is not a permutation");
      seen[v] = true;
    }
  }
}

std::vector<std::vector<int>> group_elements(const GroupAction& a) {
  validate(a);
  std::vector<int> id(a.degree);
  for (int i = 0; i < a.degree; ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : a.gens) {
      std::vector<int> nxt(a.degree);
      for (int i = 0; i < a.degree; ++i) nxt[i] = g[cur[i]];
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> group_orbits(const GroupAction& a) {
  validate(a);
  std::vector<int> parent(a.degree);
  for (int i = 0; i < a.degree; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : a.gens)
    for (int i = 0; i < a.degree; ++i) {
      int ra = find(i), rb = find(g[i]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(a.degree, -1);
  for (int i = 0; i < a.degree; ++i) {
    int r = find(i);
    if (slot[r] == -1) {
      slot[r] = (int)orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(i);
  }
  return orbits;
}

GroupAction extend_to_frozen(const GroupAction& a) {
  GroupAction e{2 * a.degree, {}};
  for (const auto& g : a.gens) {
    std::vector<int> gg(2 * a.degree);
    for (int i = 0; i < a.degree; ++i) {
      gg[i] = g[i];
      gg[a.degree + i] = a.degree + g[i];
    }
    e.gens.push_back(std::move(gg));
  }
  return e;
}

bool is_invariant(const IntMatrix& b, const GroupAction& a) {
  const int n = (int)b.size();
  if (a.degree != n) throw std::invalid_argument("is_invariant: degree mismatch");
  for (const auto& g : a.gens)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < (int)b[i].size(); ++j)
        if (b[g[i]][g[j]] != b[i][j]) return false;
  return true;
}

AdmissibilityReport is_admissible(const IntMatrix& b, const GroupAction& a, int n_mutable) {
  const int n = (int)b.size();
  if (n_mutable < 0) n_mutable = n;
  auto orbits = group_orbits(a);
  for (const auto& orb : orbits) {
    bool has_mut = false, has_frozen = false;
    for (int i : orb) (i < n_mutable ? has_mut : has_frozen) = true;
    if (has_mut && has_frozen)
      return {false, "orbit mixes mutable and frozen indices", orb.front(), orb.back()};
  }
  for (const auto& orb : orbits) {
    if (orb.front() >= n_mutable) continue;
    for (size_t s = 0; s < orb.size(); ++s)
      for (size_t t = s + 1; t < orb.size(); ++t)
        if (b[orb[s]][orb[t]] != 0)
          return {false, "arrow inside an orbit", orb[s], orb[t]};
  }
  for (const auto& orb : orbits) {
    for (size_t s = 0; s < orb.size(); ++s)
      for (size_t t = s + 1; t < orb.size(); ++t)
        for (int j = 0; j < (int)b[0].size(); ++j)
          if (b[orb[s]][j] * b[orb[t]][j] < 0)
            return {false, "mixed arrow signs toward index " + std::to_string(j),
                    orb[s], orb[t]};
  }
  return {true, "", -1, -1};
}

namespace {

// Rectangular fold: rows grouped by row_orbits, columns by col_orbits.
IntMatrix fold_rect(const IntMatrix& b, const std::vector<std::vector<int>>& row_orbits,
                    const std::vector<std::vector<int>>& col_orbits) {
  IntMatrix out(row_orbits.size(), std::vector<long long>(col_orbits.size(), 0));
  for (size_t I = 0; I < row_orbits.size(); ++I)
    for (size_t J = 0; J < col_orbits.size(); ++J) {
      bool first = true;
      long long val = 0;
      for (int j : col_orbits[J]) {
        long long s = 0;
        for (int i : row_orbits[I]) s += b[i][j];
        if (first) {
          val = s;
          first = false;
        } else if (s != val) {
          throw std::runtime_error("fold: column sum depends on the representative");
        }
      }
      out[I][J] = val;
    }
  return out;
}

}  // namespace

FoldedMatrix fold_matrix(const IntMatrix& b, const GroupAction& a) {
  if (!is_invariant(b, a)) throw std::runtime_error("fold: matrix is not invariant");
  auto rep = is_admissible(b, a);
  if (!rep.ok) throw std::runtime_error("fold: matrix is not admissible: " + rep.violation);
  auto orbits = group_orbits(a);
  return {orbits, orbits, fold_rect(b, orbits, orbits)};
}

PCSeed fold_seed(const PCSeed& s, const GroupAction& a) {
  const int n = s.bc.n;
  if (a.degree != n) throw std::invalid_argument("fold_seed: degree mismatch");
  auto morb = group_orbits(a);
  auto xorb = group_orbits(extend_to_frozen(a));  // mutable orbits first, then frozen
  IntMatrix folded = fold_rect(s.bc.b, xorb, morb);
  PCSeed out;
  out.bc.n = (int)morb.size();
  out.bc.m = (int)xorb.size();
  out.bc.b = std::move(folded);
  validate(out.bc);
  return out;
}

IntMatrix orbit_mutate(const IntMatrix& b, const GroupAction& a, int orbit_index) {
  auto orbits = group_orbits(a);
  if (orbit_index < 0 || orbit_index >= (int)orbits.size())
    throw std::invalid_argument("orbit_mutate: orbit index out of range");
  const auto& orb = orbits[orbit_index];
  for (size_t s = 0; s < orb.size(); ++s)
    for (size_t t = s + 1; t < orb.size(); ++t)
      if (b[orb[s]][orb[t]] != 0)
        throw std::runtime_error("orbit_mutate: orbit members are connected");
  ExchangeMatrix m = ExchangeMatrix::square(b);
  for (int k : orb) m = mutate(m, k);
  return m.b;
}

PCSeed orbit_mutate(const PCSeed& s, const GroupAction& a, int orbit_index) {
  auto orbits = group_orbits(a);
  if (orbit_index < 0 || orbit_index >= (int)orbits.size())
    throw std::invalid_argument("orbit_mutate: orbit index out of range");
  const auto& orb = orbits[orbit_index];
  for (size_t i = 0; i < orb.size(); ++i)
    for (size_t j = i + 1; j < orb.size(); ++j)
      if (s.bc.b[orb[i]][orb[j]] != 0)
        throw std::runtime_error("orbit_mutate: orbit members are connected");
  PCSeed out = s;
  for (int k : orb) out = mutate(out, k);
  return out;
}

std::optional<bool> is_globally_foldable(const IntMatrix& b, const GroupAction& a,
                                         long long budget, std::string* violation) {
  auto check = [&](const IntMatrix& m) -> bool {
    if (!is_invariant(m, a)) {
      if (violation) *violation = "reached a non-invariant matrix";
      return false;
    }
    auto rep = is_admissible(m, a);
    if (!rep.ok) {
      if (violation) *violation = rep.violation;
      return false;
    }
    return true;
  };
  if (!check(b)) return false;
  const int norb = (int)group_orbits(a).size();
  auto raw_key = [](const IntMatrix& m) {
    std::string s;
    for (const auto& row : m)
      for (long long v : row) s += std::to_string(v) + ",";
    return s;
  };
  std::unordered_set<std::string> seen{raw_key(b)};
  std::deque<IntMatrix> queue{b};
  while (!queue.empty()) {
    IntMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (int oi = 0; oi < norb; ++oi) {
      IntMatrix nb = orbit_mutate(cur, a, oi);
      std::string key = raw_key(nb);
      if (seen.contains(key)) continue;
      if (!check(nb)) return false;
      if ((long long)seen.size() >= budget) return std::nullopt;
      seen.insert(std::move(key));
      queue.push_back(std::move(nb));
    }
  }
  return true;
}

FoldedExchangeGraph folded_exchange_graph(const IntMatrix& b, const GroupAction& a,
                                          long long max_nodes) {
  PCSeed init = PCSeed::initial(b);
  const int norb = (int)group_orbits(a).size();
  GroupAction ext = extend_to_frozen(a);
  auto node_check = [&](const PCSeed& s) {
    if (!is_invariant(s.bc.b, ext))
      throw std::runtime_error("folded exchange graph: reached a non-invariant seed");
    auto rep = is_admissible(s.bc.b, ext, a.degree);
    if (!rep.ok)
      throw std::runtime_error("folded exchange graph: non-admissible seed: " + rep.violation);
  };
  node_check(init);
  FoldedExchangeGraph g;
  std::unordered_map<std::string, int> index;
  std::deque<std::pair<PCSeed, int>> queue;
  index[seed_key(fold_seed(init, a))] = 0;
  g.keys.push_back(seed_key(fold_seed(init, a)));
  queue.push_back({init, 0});
  while (!queue.empty()) {
    auto [seed, id] = std::move(queue.front());
    queue.pop_front();
    if ((int)g.adj.size() <= id) g.adj.resize(id + 1);
    g.adj[id].assign(norb, -1);
    for (int oi = 0; oi < norb; ++oi) {
      PCSeed nb = orbit_mutate(seed, a, oi);
      node_check(nb);
      std::string key = seed_key(fold_seed(nb, a));
      auto it = index.find(key);
      if (it != index.end()) {
        g.adj[id][oi] = it->second;
        continue;
      }
      if ((long long)g.keys.size() >= max_nodes) {
        g.complete = false;
        continue;
      }
      int nid = (int)g.keys.size();
      index.emplace(key, nid);
      g.keys.push_back(key);
      g.adj[id][oi] = nid;
      queue.push_back({std::move(nb), nid});
    }
  }
  g.adj.resize(g.keys.size());
  return g;
}

namespace {

// b for a path/tree given directed edges (i -> j means b[i][j] = w > 0).
IntMatrix quiver_from_arrows(int n, const std::vector<std::array<long long, 3>>& arrows) {
  IntMatrix b(n, std::vector<long long>(n, 0));
  for (auto [i, j, w] : arrows) {
    b[i][j] = w;
    b[j][i] = -w;
  }
  return b;
}

GroupAction action_from_pairs(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> g(degree);
  for (int i = 0; i < degree; ++i) g[i] = i;
  for (const auto& cyc : cycles)
    for (size_t t = 0; t < cyc.size(); ++t) g[cyc[t]] = cyc[(t + 1) % cyc.size()];
  return GroupAction{degree, {g}};
}

}  // namespace

std::vector<FoldingTriple> finite_folding_triples() {
  std::vector<FoldingTriple> out;
  auto bip = [](const std::string& name) {
    return bipartite_exchange_matrix(*parse_type(name));
  };
  // A_{2n-1} with i <-> 2n-i folding to B_n.
  out.push_back({"A3/Z2", *parse_type("A3"), *parse_type("B2"), bip("A3"),
                 action_from_pairs(3, {{0, 2}})});
  out.push_back({"A5/Z2", *parse_type("A5"), *parse_type("B3"), bip("A5"),
                 action_from_pairs(5, {{0, 4}, {1, 3}})});
  // D_{n+1} swapping the two leaves folding to C_n.
  out.push_back({"D4/Z2", *parse_type("D4"), *parse_type("C3"), bip("D4"),
                 action_from_pairs(4, {{2, 3}})});
  out.push_back({"D5/Z2", *parse_type("D5"), *parse_type("C4"), bip("D5"),
                 action_from_pairs(5, {{3, 4}})});
  // E6 diagram flip (1 <-> 6, 3 <-> 5) folding to F4.
  out.push_back({"E6/Z2", *parse_type("E6"), *parse_type("F4"), bip("E6"),
                 action_from_pairs(6, {{0, 5}, {2, 4}})});
  // D4 with the three leaves rotated, leaves oriented into the center.
  out.push_back({"D4/Z3", *parse_type("D4"), *parse_type("G2"),
                 quiver_from_arrows(4, {{1, 0, 1}, {2, 0, 1}, {3, 0, 1}}),
                 action_from_pairs(4, {{1, 2, 3}})});
  return out;
}

std::vector<FoldingTriple> affine_folding_triples() {
  std::vector<FoldingTriple> out;
  auto bip = [](const std::string& name) {
    TypeList t = *parse_type(name);
    IntMatrix c = cartan_matrix(t);
    auto col = bipartite_coloring(c);
    const int n = (int)c.size();
    IntMatrix b(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        b[i][j] = (*col)[i] == 1 ? -c[i][j] : c[i][j];
      }
    return b;
  };
  // Etilde6 = catalog E6 plus vertex 7 attached to 2; arm rotation / flip.
  out.push_back({"Etilde6/Z3", *parse_type("Etilde6"), *parse_type("Gtilde2"),
                 bip("Etilde6"), action_from_pairs(7, {{2, 4, 1}, {0, 5, 6}})});
  out.push_back({"Etilde6/Z2", *parse_type("Etilde6"), *parse_type("E6^(2)"),
                 bip("Etilde6"), action_from_pairs(7, {{2, 4}, {0, 5}})});
  // Etilde7 = catalog E7 plus vertex 8 attached to 1; diagram flip.
  out.push_back({"Etilde7/Z2", *parse_type("Etilde7"), *parse_type("Ftilde4"),
                 bip("Etilde7"), action_from_pairs(8, {{7, 6}, {0, 5}, {2, 4}})});
  // Dtilde6 = catalog D6 plus vertex 7 attached to 2; half-turn.
  out.push_back({"Dtilde6/Z2", *parse_type("Dtilde6"), *parse_type("Btilde3"),
                 bip("Dtilde6"), action_from_pairs(7, {{0, 4}, {1, 3}, {6, 5}})});
  // Dtilde4 is a star with center 2; swap both leaf pairs or one.
  out.push_back({"Dtilde4/Z2Z2", *parse_type("Dtilde4"), *parse_type("Ctilde2"),
                 bip("Dtilde4"), action_from_pairs(5, {{0, 2}, {3, 4}})});
  out.push_back({"Dtilde4/Z2", *parse_type("Dtilde4"), *parse_type("A5^(2)"),
                 bip("Dtilde4"), action_from_pairs(5, {{3, 4}})});
  return out;
}

}  // namespace weaveclust
