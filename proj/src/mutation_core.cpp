#include "weaveclust/mutation_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace weaveclust {

using boost::multiprecision::cpp_int;

ExchangeMatrix ExchangeMatrix::square(IntMatrix bb) {
  ExchangeMatrix r;
  r.m = r.n = (int)bb.size();
  r.b = std::move(bb);
  validate(r);
  return r;
}

ExchangeMatrix ExchangeMatrix::with_principal_coeffs(IntMatrix bb) {
  ExchangeMatrix r;
  r.n = (int)bb.size();
  r.m = 2 * r.n;
  r.b = std::move(bb);
  for (int i = 0; i < r.n; ++i) {
    std::vector<long long> row(r.n, 0);
    row[i] = 1;
    r.b.push_back(std::move(row));
  }
  validate(r);
  return r;
}

IntMatrix ExchangeMatrix::principal() const {
  IntMatrix p(n);
  for (int i = 0; i < n; ++i) p[i] = b[i];
  return p;
}

void validate(const ExchangeMatrix& bm) {
  if (bm.m < bm.n || bm.n < 0 || (int)bm.b.size() != bm.m)
    throw std::invalid_argument("exchange matrix: bad dimensions");
  for (const auto& row : bm.b)
    if ((int)row.size() != bm.n) throw std::invalid_argument("exchange matrix: ragged rows");
  if (!skew_symmetrizer(bm.principal()))
    throw std::invalid_argument("exchange matrix: principal part not skew-symmetrizable");
}

std::optional<std::vector<long long>> skew_symmetrizer(const IntMatrix& b) {
  const int n = (int)b.size();
  for (int i = 0; i < n; ++i) {
    if (b[i][i] != 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      if ((b[i][j] == 0) != (b[j][i] == 0)) return std::nullopt;
      if (b[i][j] != 0 && (b[i][j] > 0) == (b[j][i] > 0)) return std::nullopt;
    }
  }
  // Propagate d ratios componentwise: d_i b_ij = -d_j b_ji.
  std::vector<cpp_int> num(n, 0), den(n, 1);
  std::vector<int> order;
  for (int s = 0; s < n; ++s) {
    if (num[s] != 0) continue;
    num[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (b[u][v] == 0) continue;
        cpp_int nv = num[u] * (-b[u][v]);
        cpp_int dv = den[u] * b[v][u];
        if (dv < 0) { nv = -nv; dv = -dv; }
        if (nv <= 0) return std::nullopt;
        if (num[v] == 0) {
          cpp_int g = gcd(nv, dv);
          num[v] = nv / g;
          den[v] = dv / g;
          stack.push_back(v);
        } else if (num[v] * dv != nv * den[v]) {
          return std::nullopt;
        }
      }
    }
  }
  cpp_int l = 1;
  for (int i = 0; i < n; ++i) l = lcm(l, den[i]);
  std::vector<cpp_int> d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]);
  cpp_int g = 0;
  for (int i = 0; i < n; ++i) g = gcd(g, d[i]);
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[i] = (long long)(d[i] / g);
  return out;
}

ExchangeMatrix mutate(const ExchangeMatrix& bm, int k) {
  if (k < 0 || k >= bm.n) throw std::invalid_argument("mutate: index out of range");
  ExchangeMatrix r = bm;
  for (int i = 0; i < bm.m; ++i) {
    for (int j = 0; j < bm.n; ++j) {
      if (i == k || j == k) {
        r.b[i][j] = -bm.b[i][j];
      } else {
        long long bik = bm.b[i][k], bkj = bm.b[k][j];
        r.b[i][j] = bm.b[i][j] + (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
      }
    }
  }
  return r;
}

ExchangeMatrix apply(const ExchangeMatrix& bm, const MutationSequence& seq) {
  ExchangeMatrix r = bm;
  for (auto it = seq.ks.rbegin(); it != seq.ks.rend(); ++it) r = mutate(r, *it);
  return r;
}

IntMatrix cartan_counterpart(const IntMatrix& b) {
  const int n = (int)b.size();
  IntMatrix c(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = i == j ? 2 : -std::llabs(b[i][j]);
  return c;
}

bool is_acyclic(const IntMatrix& b) {
  const int n = (int)b.size();
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  auto dfs = [&](auto&& self, int u) -> bool {
    state[u] = 1;
    for (int v = 0; v < n; ++v) {
      if (b[u][v] <= 0) continue;
      if (state[v] == 1) return false;
      if (state[v] == 0 && !self(self, v)) return false;
    }
    state[u] = 2;
    return true;
  };
  for (int i = 0; i < n; ++i)
    if (state[i] == 0 && !dfs(dfs, i)) return false;
  return true;
}

std::optional<std::vector<int>> quiver_bipartition(const IntMatrix& b) {
  const int n = (int)b.size();
  std::vector<int> eps(n);
  for (int i = 0; i < n; ++i) {
    bool out = false, in = false;
    for (int j = 0; j < n; ++j) {
      if (b[i][j] > 0) out = true;
      if (b[i][j] < 0) in = true;
    }
    if (out && in) return std::nullopt;
    eps[i] = in ? -1 : 1;
  }
  return eps;
}

MutationSequence coxeter_mutation(const IntMatrix& b) {
  auto eps = quiver_bipartition(b);
  if (!eps) throw std::invalid_argument("coxeter_mutation: quiver is not bipartite");
  MutationSequence seq;
  for (int i = 0; i < (int)b.size(); ++i)
    if ((*eps)[i] == 1) seq.ks.push_back(i);
  for (int i = 0; i < (int)b.size(); ++i)
    if ((*eps)[i] == -1) seq.ks.push_back(i);
  return seq;
}

namespace {

std::string flatten_key(const IntMatrix& b, const std::vector<int>& sigma) {
  const int n = (int)b.size();
  std::string s;
  s.reserve((size_t)n * n * 8);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      unsigned long long v = (unsigned long long)b[sigma[i]][sigma[j]];
      for (int t = 7; t >= 0; --t) s.push_back((char)((v >> (8 * t)) & 0xff));
    }
  return s;
}

// Iteratively refined vertex signatures; permutation-covariant.
std::vector<std::string> vertex_classes(const IntMatrix& b) {
  const int n = (int)b.size();
  std::vector<std::string> sig(n);
  for (int i = 0; i < n; ++i) {
    std::vector<long long> row;
    for (int j = 0; j < n; ++j)
      if (j != i && (b[i][j] || b[j][i])) row.push_back(b[i][j] * 1000 + b[j][i]);
    std::sort(row.begin(), row.end());
    for (long long v : row) sig[i] += std::to_string(v) + ",";
  }
  for (int round = 0; round < 2; ++round) {
    std::vector<std::string> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> nb;
      for (int j = 0; j < n; ++j)
        if (j != i && (b[i][j] || b[j][i]))
          nb.push_back(std::to_string(b[i][j]) + "/" + std::to_string(b[j][i]) + ":" + sig[j]);
      std::sort(nb.begin(), nb.end());
      next[i] = sig[i] + "|";
      for (auto& s : nb) next[i] += s + ";";
    }
    sig = std::move(next);
  }
  return sig;
}

}  // namespace

std::string canonical_quiver_key(const IntMatrix& b) {
  const int n = (int)b.size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (n > 9) return flatten_key(b, id);
  auto sig = vertex_classes(b);
  // Vertices grouped by signature, groups ordered by signature value.
  std::map<std::string, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[sig[i]].push_back(i);
  double perms = 1;
  for (auto& [k, v] : groups) {
    for (size_t t = 2; t <= v.size(); ++t) perms *= (double)t;
  }
  if (perms > 5e6) return flatten_key(b, id);
  std::vector<std::vector<int>> grp;
  for (auto& [k, v] : groups) grp.push_back(v);
  std::string best;
  std::vector<int> sigma;
  auto rec = [&](auto&& self, size_t gi) -> void {
    if (gi == grp.size()) {
      std::string cand = flatten_key(b, sigma);
      if (best.empty() || cand < best) best = std::move(cand);
      return;
    }
    std::sort(grp[gi].begin(), grp[gi].end());
    do {
      size_t len = sigma.size();
      sigma.insert(sigma.end(), grp[gi].begin(), grp[gi].end());
      self(self, gi + 1);
      sigma.resize(len);
    } while (std::next_permutation(grp[gi].begin(), grp[gi].end()));
  };
  rec(rec, 0);
  return best;
}

namespace {

// Underlying-graph connected components of a square matrix.
std::vector<std::vector<int>> components(const IntMatrix& b) {
  const int n = (int)b.size();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] != -1) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] == -1 && (b[u][v] != 0 || b[v][u] != 0)) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
  return out;
}

IntMatrix submatrix(const IntMatrix& b, const std::vector<int>& idx) {
  const int k = (int)idx.size();
  IntMatrix s(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s[i][j] = b[idx[i]][idx[j]];
  return s;
}

// Underlying graph is a single n-cycle with unit weights; reports the number
// of arrows in each direction around the cycle.
bool is_unit_cycle(const IntMatrix& b, int& fwd, int& bwd) {
  const int n = (int)b.size();
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    int deg = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && b[i][j] != 0) {
        if (std::llabs(b[i][j]) != 1) return false;
        ++deg;
      }
    if (deg != 2) return false;
  }
  // Walk the cycle.
  std::vector<int> cyc{0};
  int prev = -1, cur = 0;
  for (int step = 0; step < n; ++step) {
    int nxt = -1;
    for (int j = 0; j < n; ++j)
      if (j != cur && j != prev && b[cur][j] != 0) { nxt = j; break; }
    if (nxt == -1) return false;
    prev = cur;
    cur = nxt;
    if (cur == 0) {
      if (step != n - 1) return false;
      break;
    }
    cyc.push_back(cur);
  }
  if ((int)cyc.size() != n) return false;
  fwd = bwd = 0;
  for (int i = 0; i < n; ++i) {
    int u = cyc[i], v = cyc[(i + 1) % n];
    if (b[u][v] > 0) ++fwd; else ++bwd;
  }
  return true;
}

std::optional<TypeList> classify_component(const IntMatrix& b0, long long budget) {
  const int n = (int)b0.size();
  if (n == 0) return TypeList{};
  int fwd = 0, bwd = 0;
  const bool cycle_graph = is_unit_cycle(b0, fwd, bwd);
  if (cycle_graph && (fwd == 0 || bwd == 0) && n >= 4)
    return TypeList{{Family::D, n, 0, 0}};
  auto classify_acyclic = [](const IntMatrix& b) -> std::optional<TypeList> {
    int f = 0, w = 0;
    if (is_unit_cycle(b, f, w) && f > 0 && w > 0) {
      int p = std::min(f, w), q = std::max(f, w);
      return TypeList{{Family::ATilde, p + q - 1, p, q}};
    }
    return classify_cartan(cartan_counterpart(b));
  };
  if (is_acyclic(b0)) return classify_acyclic(b0);
  std::unordered_set<std::string> seen;
  std::deque<IntMatrix> queue{b0};
  seen.insert(canonical_quiver_key(b0));
  while (!queue.empty()) {
    IntMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      ExchangeMatrix nb = mutate(ExchangeMatrix::square(cur), k);
      if (is_acyclic(nb.b)) return classify_acyclic(nb.b);
      std::string key = canonical_quiver_key(nb.b);
      if (seen.contains(key)) continue;
      if ((long long)seen.size() >= budget) return std::nullopt;
      seen.insert(std::move(key));
      queue.push_back(std::move(nb.b));
    }
  }
  return std::nullopt;  // class exhausted with no acyclic member
}

}  // namespace

std::optional<TypeList> classify_type(const IntMatrix& b, long long node_budget) {
  if (!skew_symmetrizer(b)) throw std::invalid_argument("classify_type: not skew-symmetrizable");
  TypeList out;
  for (const auto& idx : components(b)) {
    auto part = classify_component(submatrix(b, idx), node_budget);
    if (!part) return std::nullopt;
    out.insert(out.end(), part->begin(), part->end());
  }
  return sorted(std::move(out));
}

int matrix_rank(const IntMatrix& b) {
  if (b.empty()) return 0;
  std::vector<std::vector<cpp_int>> a(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i].assign(b[i].begin(), b[i].end());
  const int rows = (int)a.size(), cols = (int)a[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv == -1) continue;
    std::swap(a[rank], a[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      cpp_int f = a[r][c], p = a[rank][c];
      for (int cc = 0; cc < cols; ++cc) a[r][cc] = a[r][cc] * p - a[rank][cc] * f;
    }
    ++rank;
  }
  return rank;
}

}  // namespace weaveclust
