#include "weaveclust/seeds.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace weaveclust {

YSeed YSeed::initial(IntMatrix b) {
  YSeed s;
  s.b = ExchangeMatrix::square(std::move(b));
  for (int i = 0; i < s.b.n; ++i)
    s.y.push_back(RationalFunction::variable(s.b.n, i));
  return s;
}

YSeed mutate(const YSeed& s, int k) {
  if (k < 0 || k >= s.b.n) throw std::invalid_argument("y mutate: index out of range");
  YSeed r;
  r.b = mutate(s.b, k);
  r.y.resize(s.y.size());
  const int n = s.b.n;
  RationalFunction one_plus = RationalFunction::constant(n, 1) + s.y[k];
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      r.y[i] = pow(s.y[k], -1);
    } else {
      long long bik = s.b.b[i][k];
      r.y[i] = s.y[i] * pow(s.y[k], (int)std::max(bik, 0LL)) * pow(one_plus, (int)-bik);
    }
  }
  return r;
}

XSeed XSeed::initial(ExchangeMatrix b) {
  XSeed s;
  s.b = std::move(b);
  for (int i = 0; i < s.b.m; ++i)
    s.x.push_back(RationalFunction::variable(s.b.m, i));
  return s;
}

XSeed mutate(const XSeed& s, int k) {
  if (k < 0 || k >= s.b.n) throw std::invalid_argument("x mutate: index out of range");
  if (s.b.n > 4) throw std::invalid_argument("x mutate: supported only up to mutable rank 4");
  XSeed r;
  r.b = mutate(s.b, k);
  r.x = s.x;
  const int m = s.b.m;
  RationalFunction pos = RationalFunction::constant(m, 1), neg = pos;
  for (int j = 0; j < m; ++j) {
    long long bjk = s.b.b[j][k];
    if (bjk > 0) pos = pos * pow(s.x[j], (int)bjk);
    if (bjk < 0) neg = neg * pow(s.x[j], (int)-bjk);
  }
  r.x[k] = (pos + neg) / s.x[k];
  return r;
}

PCSeed PCSeed::initial(IntMatrix b) {
  PCSeed s;
  s.bc = ExchangeMatrix::with_principal_coeffs(std::move(b));
  return s;
}

IntMatrix PCSeed::bpart() const {
  IntMatrix b(bc.n);
  for (int i = 0; i < bc.n; ++i) b[i] = bc.b[i];
  return b;
}

IntMatrix PCSeed::cpart() const {
  IntMatrix c(bc.n);
  for (int i = 0; i < bc.n; ++i) c[i] = bc.b[bc.n + i];
  return c;
}

PCSeed mutate(const PCSeed& s, int k) {
  PCSeed r;
  r.bc = mutate(s.bc, k);
  return r;
}

namespace {

void encode_int(std::string& s, long long v) {
  unsigned long long u = (unsigned long long)v;
  for (int t = 7; t >= 0; --t) s.push_back((char)((u >> (8 * t)) & 0xff));
}

template <class EncodeFn>
std::string min_over_permutations(int n, EncodeFn&& encode) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::string best;
  do {
    std::string cand = encode(sigma);
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace

std::string seed_key(const YSeed& s) {
  const int n = s.b.n;
  std::vector<std::string> ys(n);
  for (int i = 0; i < n; ++i) ys[i] = to_string(s.y[i]);
  return min_over_permutations(n, [&](const std::vector<int>& sigma) {
    std::string out;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) encode_int(out, s.b.b[sigma[i]][sigma[j]]);
    for (int i = 0; i < n; ++i) {
      out += ys[sigma[i]];
      out.push_back('\1');
    }
    return out;
  });
}

std::string seed_key(const PCSeed& s) {
  const int n = s.bc.n;
  return min_over_permutations(n, [&](const std::vector<int>& sigma) {
    std::string out;
    out.reserve((size_t)2 * n * n * 8);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) encode_int(out, s.bc.b[sigma[i]][sigma[j]]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) encode_int(out, s.bc.b[n + i][sigma[j]]);
    return out;
  });
}

int ExchangeGraph::node_of(const std::string& key) const {
  for (int i = 0; i < (int)keys.size(); ++i)
    if (keys[i] == key) return i;
  return -1;
}

namespace {

template <class Seed>
ExchangeGraph bfs_graph(Seed init, long long max_nodes) {
  ExchangeGraph g;
  std::unordered_map<std::string, int> index;
  std::deque<std::pair<Seed, int>> queue;
  std::string k0 = seed_key(init);
  index[k0] = 0;
  g.keys.push_back(k0);
  g.parent.push_back({});
  queue.push_back({std::move(init), 0});
  while (!queue.empty()) {
    auto [seed, id] = std::move(queue.front());
    queue.pop_front();
    int nmut = 0;
    if constexpr (std::is_same_v<Seed, PCSeed>) nmut = seed.bc.n;
    else nmut = seed.b.n;
    if ((int)g.adj.size() <= id) g.adj.resize(id + 1);
    g.adj[id].assign(nmut, -1);
    for (int k = 0; k < nmut; ++k) {
      Seed nb = mutate(seed, k);
      std::string key = seed_key(nb);
      auto it = index.find(key);
      if (it != index.end()) {
        g.adj[id][k] = it->second;
        continue;
      }
      if ((long long)g.keys.size() >= max_nodes) {
        g.complete = false;
        continue;
      }
      int nid = (int)g.keys.size();
      index.emplace(key, nid);
      g.keys.push_back(key);
      g.parent.push_back({id, k});
      g.adj[id][k] = nid;
      queue.push_back({std::move(nb), nid});
    }
  }
  g.adj.resize(g.keys.size());
  return g;
}

}  // namespace

ExchangeGraph exchange_graph_y(const IntMatrix& b, long long max_nodes) {
  return bfs_graph(YSeed::initial(b), max_nodes);
}

ExchangeGraph exchange_graph_pc(const IntMatrix& b, long long max_nodes) {
  return bfs_graph(PCSeed::initial(b), max_nodes);
}

bool backends_agree(const IntMatrix& b, long long max_nodes) {
  PCSeed p0 = PCSeed::initial(b);
  YSeed y0 = YSeed::initial(b);
  std::unordered_map<std::string, std::string> p2y, y2p;
  std::deque<std::pair<PCSeed, YSeed>> queue;
  p2y[seed_key(p0)] = seed_key(y0);
  y2p[seed_key(y0)] = seed_key(p0);
  queue.push_back({p0, y0});
  long long visited = 1;
  const int n = (int)b.size();
  while (!queue.empty()) {
    auto [p, y] = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      PCSeed pn = mutate(p, k);
      YSeed yn = mutate(y, k);
      std::string kp = seed_key(pn), ky = seed_key(yn);
      auto itp = p2y.find(kp);
      auto ity = y2p.find(ky);
      if (itp == p2y.end() && ity == y2p.end()) {
        if (++visited > max_nodes) return false;
        p2y[kp] = ky;
        y2p[ky] = kp;
        queue.push_back({std::move(pn), std::move(yn)});
      } else if (itp == p2y.end() || ity == y2p.end() || itp->second != ky ||
                 ity->second != kp) {
        return false;
      }
    }
  }
  return true;
}

namespace {

template <class Seed>
Seed coxeter_step(const Seed& s) {
  IntMatrix b;
  if constexpr (std::is_same_v<Seed, PCSeed>) b = s.bpart();
  else b = s.b.principal();
  return apply(s, coxeter_mutation(b));
}

template <class Seed>
std::vector<std::string> coxeter_orbit_impl(Seed s, int r_max) {
  std::vector<std::string> out{seed_key(s)};
  for (int r = 1; r <= r_max; ++r) {
    s = coxeter_step(s);
    out.push_back(seed_key(s));
  }
  return out;
}

template <class Seed>
CoxeterOrder coxeter_order_impl(const Seed& s0, long long budget) {
  std::string k0 = seed_key(s0);
  Seed s = s0;
  for (long long r = 1; r <= budget; ++r) {
    s = coxeter_step(s);
    if (seed_key(s) == k0) return {true, r};
  }
  return {false, budget};
}

}  // namespace

std::vector<std::string> coxeter_orbit(const PCSeed& s, int r_max) {
  return coxeter_orbit_impl(s, r_max);
}
std::vector<std::string> coxeter_orbit(const YSeed& s, int r_max) {
  return coxeter_orbit_impl(s, r_max);
}
CoxeterOrder coxeter_order(const PCSeed& s, long long budget) {
  return coxeter_order_impl(s, budget);
}
CoxeterOrder coxeter_order(const YSeed& s, long long budget) {
  return coxeter_order_impl(s, budget);
}

std::optional<NormalFormWitness> normal_form_witness(const IntMatrix& b0,
                                                     const std::string& target_key,
                                                     long long budget) {
  PCSeed init = PCSeed::initial(b0);
  CoxeterOrder ord = coxeter_order(init, budget);
  if (!ord.finite) return std::nullopt;
  const int n = (int)b0.size();
  PCSeed base = init;
  for (int r = 0; r < (int)ord.value; ++r) {
    if (r > 0) base = coxeter_step(base);
    if (seed_key(base) == target_key)
      return NormalFormWitness{r, 0, MutationSequence{}};
    for (int avoided = 0; avoided < n; ++avoided) {
      // BFS from base over words avoiding one index.
      std::unordered_map<std::string, int> index;
      std::vector<std::pair<int, int>> parent{{-1, -1}};
      std::vector<PCSeed> reps{base};
      index[seed_key(base)] = 0;
      std::deque<int> queue{0};
      std::optional<int> hit;
      while (!queue.empty() && !hit) {
        int id = queue.front();
        queue.pop_front();
        for (int k = 0; k < n && !hit; ++k) {
          if (k == avoided) continue;
          PCSeed nb = mutate(reps[id], k);
          std::string key = seed_key(nb);
          if (index.contains(key)) continue;
          if ((long long)reps.size() >= budget) return std::nullopt;
          int nid = (int)reps.size();
          index.emplace(key, nid);
          reps.push_back(std::move(nb));
          parent.push_back({id, k});
          if (key == target_key) hit = nid;
          else queue.push_back(nid);
        }
      }
      if (hit) {
        MutationSequence word;
        for (int cur = *hit; parent[cur].first != -1; cur = parent[cur].first)
          word.ks.push_back(parent[cur].second);
        // ks currently lists last-applied first; composition order wants that
        // leftmost, so this is already right-to-left application order.
        PCSeed replay = apply(base, word);
        if (seed_key(replay) != target_key)
          throw std::logic_error("normal_form_witness: replay mismatch");
        return NormalFormWitness{r, avoided, std::move(word)};
      }
    }
  }
  return std::nullopt;
}

IntMatrix bipartite_exchange_matrix(const TypeList& ts) {
  for (const auto& t : ts)
    if (!is_finite(t)) throw std::invalid_argument("bipartite_exchange_matrix: finite types only");
  IntMatrix c = cartan_matrix(ts);
  auto col = bipartite_coloring(c);
  if (!col) throw std::invalid_argument("bipartite_exchange_matrix: diagram has an odd cycle");
  const int n = (int)c.size();
  IntMatrix b(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0) continue;
      b[i][j] = (*col)[i] == 1 ? -c[i][j] : c[i][j];
    }
  return b;
}

}  // namespace weaveclust
