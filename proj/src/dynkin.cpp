#include "weaveclust/dynkin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace weaveclust {

namespace {

IntMatrix zero2(int n) { return IntMatrix(n, std::vector<long long>(n, 0)); }

IntMatrix diag2(int n) {
  IntMatrix m = zero2(n);
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

// c[i][j] = -a, c[j][i] = -b, 1-based vertices.
void edge(IntMatrix& c, int i, int j, long long a = 1, long long b = 1) {
  c[i - 1][j - 1] = -a;
  c[j - 1][i - 1] = -b;
}

void check_sub(bool ok, const DynkinType& t) {
  if (!ok) throw std::invalid_argument("invalid subscript for family: " + to_string(t));
}

}  // namespace

bool is_finite(const DynkinType& t) {
  switch (t.family) {
    case Family::A: case Family::B: case Family::C: case Family::D:
    case Family::E: case Family::F: case Family::G: return true;
    default: return false;
  }
}

int vertex_count(const DynkinType& t) {
  switch (t.family) {
    case Family::A: case Family::B: case Family::C: case Family::D:
    case Family::E: return t.sub;
    case Family::F: return 4;
    case Family::G: return 2;
    case Family::ATilde: case Family::BTilde: case Family::CTilde:
    case Family::DTilde: case Family::ETilde: return t.sub + 1;
    case Family::FTilde: return 5;
    case Family::GTilde: return 3;
    case Family::TwistedAEven: return t.sub / 2 + 1;
    case Family::TwistedAOdd: return (t.sub + 3) / 2;
    case Family::TwistedD: return t.sub;
    case Family::TwistedE6: return 5;
    case Family::TwistedD4: return 3;
  }
  throw std::logic_error("unreachable");
}

int vertex_count(const TypeList& ts) {
  int n = 0;
  for (const auto& t : ts) n += vertex_count(t);
  return n;
}

IntMatrix cartan_matrix(const DynkinType& t) {
  const int s = t.sub;
  switch (t.family) {
    case Family::A: {
      check_sub(s >= 1, t);
      IntMatrix c = diag2(s);
      for (int i = 1; i < s; ++i) edge(c, i, i + 1);
      return c;
    }
    case Family::B: {
      check_sub(s >= 2, t);
      IntMatrix c = diag2(s);
      for (int i = 1; i < s - 1; ++i) edge(c, i, i + 1);
      edge(c, s - 1, s, 2, 1);
      return c;
    }
    case Family::C: {
      check_sub(s >= 3, t);
      IntMatrix c = diag2(s);
      for (int i = 1; i < s - 1; ++i) edge(c, i, i + 1);
      edge(c, s - 1, s, 1, 2);
      return c;
    }
    case Family::D: {
      check_sub(s >= 4, t);
      IntMatrix c = diag2(s);
      for (int i = 1; i < s - 2; ++i) edge(c, i, i + 1);
      edge(c, s - 2, s - 1);
      edge(c, s - 2, s);
      return c;
    }
    case Family::E: {
      check_sub(s >= 6 && s <= 8, t);
      IntMatrix c = diag2(s);
      edge(c, 1, 3);
      edge(c, 2, 4);
      for (int i = 3; i < s; ++i) edge(c, i, i + 1);
      return c;
    }
    case Family::F: {
      check_sub(s == 4, t);
      IntMatrix c = diag2(4);
      edge(c, 1, 2);
      edge(c, 2, 3, 2, 1);
      edge(c, 3, 4);
      return c;
    }
    case Family::G: {
      check_sub(s == 2, t);
      IntMatrix c = diag2(2);
      edge(c, 1, 2, 1, 3);
      return c;
    }
    case Family::ATilde: {
      check_sub(s >= 1, t);
      if (t.p != 0 || t.q != 0)
        check_sub(t.p >= 1 && t.p <= t.q && t.p + t.q == s + 1, t);
      if (s == 1) {
        IntMatrix c = diag2(2);
        edge(c, 1, 2, 2, 2);
        return c;
      }
      IntMatrix c = diag2(s + 1);
      for (int i = 1; i <= s; ++i) edge(c, i, i + 1);
      edge(c, s + 1, 1);
      return c;
    }
    case Family::BTilde: {
      check_sub(s >= 3, t);
      IntMatrix c = diag2(s + 1);
      for (int i = 1; i < s - 1; ++i) edge(c, i, i + 1);
      edge(c, s - 1, s, 2, 1);
      edge(c, 2, s + 1);
      return c;
    }
    case Family::CTilde: {
      // Path s+1, 1, 2, ..., s with both end vertices carrying a -2 row.
      check_sub(s >= 2, t);
      IntMatrix c = diag2(s + 1);
      for (int i = 1; i < s - 1; ++i) edge(c, i, i + 1);
      if (s >= 2) edge(c, s - 1, s, 1, 2);
      c[s][0] = -2;
      c[0][s] = -1;
      return c;
    }
    case Family::DTilde: {
      check_sub(s >= 4, t);
      IntMatrix c = diag2(s + 1);
      for (int i = 1; i < s - 2; ++i) edge(c, i, i + 1);
      edge(c, s - 2, s - 1);
      edge(c, s - 2, s);
      edge(c, 2, s + 1);
      return c;
    }
    case Family::ETilde: {
      check_sub(s >= 6 && s <= 8, t);
      IntMatrix c = diag2(s + 1);
      edge(c, 1, 3);
      edge(c, 2, 4);
      for (int i = 3; i < s; ++i) edge(c, i, i + 1);
      if (s == 6) edge(c, 2, 7);
      if (s == 7) edge(c, 1, 8);
      if (s == 8) edge(c, 8, 9);
      return c;
    }
    case Family::FTilde: {
      check_sub(s == 4, t);
      IntMatrix c = diag2(5);
      edge(c, 1, 2);
      edge(c, 2, 3, 2, 1);
      edge(c, 3, 4);
      edge(c, 5, 1);
      return c;
    }
    case Family::GTilde: {
      check_sub(s == 2, t);
      IntMatrix c = diag2(3);
      edge(c, 1, 2, 1, 3);
      edge(c, 2, 3);
      return c;
    }
    case Family::TwistedAEven: {
      check_sub(s >= 2 && s % 2 == 0, t);
      const int l = s / 2;
      if (l == 1) {
        IntMatrix c = diag2(2);
        edge(c, 1, 2, 4, 1);
        return c;
      }
      IntMatrix c = diag2(l + 1);
      for (int i = 1; i <= l; ++i) edge(c, i, i + 1);
      c[0][1] = -2;
      c[l - 1][l] = -2;
      return c;
    }
    case Family::TwistedAOdd: {
      check_sub(s >= 5 && s % 2 == 1, t);
      const int l = (s + 1) / 2;  // l+1 vertices
      IntMatrix c = diag2(l + 1);
      for (int i = 1; i < l - 1; ++i) edge(c, i, i + 1);
      c[0][1] = -2;
      edge(c, l - 1, l);
      edge(c, l - 1, l + 1);
      return c;
    }
    case Family::TwistedD: {
      check_sub(s >= 3, t);
      IntMatrix c = diag2(s);
      for (int i = 1; i < s; ++i) edge(c, i, i + 1);
      c[1][0] = -2;
      c[s - 2][s - 1] = -2;
      return c;
    }
    case Family::TwistedE6: {
      check_sub(s == 6, t);
      IntMatrix c = diag2(5);
      edge(c, 1, 2);
      edge(c, 2, 3);
      edge(c, 3, 4, 1, 2);
      edge(c, 4, 5);
      return c;
    }
    case Family::TwistedD4: {
      check_sub(s == 4, t);
      IntMatrix c = diag2(3);
      edge(c, 1, 2);
      edge(c, 2, 3, 1, 3);
      return c;
    }
  }
  throw std::logic_error("unreachable");
}

IntMatrix cartan_matrix(const TypeList& ts) {
  int n = vertex_count(ts);
  IntMatrix c = diag2(n);
  int off = 0;
  for (const auto& t : ts) {
    IntMatrix blk = cartan_matrix(t);
    int k = (int)blk.size();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) c[off + i][off + j] = blk[i][j];
    off += k;
  }
  return c;
}

namespace {

// All catalog types with exactly k vertices, k <= 9.
std::vector<DynkinType> candidates_with_vertices(int k) {
  std::vector<DynkinType> out;
  auto add = [&](Family f, int sub) { out.push_back({f, sub, 0, 0}); };
  if (k >= 1) add(Family::A, k);
  if (k >= 2) add(Family::B, k);
  if (k >= 3) add(Family::C, k);
  if (k >= 4) add(Family::D, k);
  if (k >= 6 && k <= 8) add(Family::E, k);
  if (k == 4) add(Family::F, 4);
  if (k == 2) add(Family::G, 2);
  if (k >= 2) add(Family::ATilde, k - 1);
  if (k >= 4) add(Family::BTilde, k - 1);
  if (k >= 3) add(Family::CTilde, k - 1);
  if (k >= 5) add(Family::DTilde, k - 1);
  if (k >= 7 && k <= 9) add(Family::ETilde, k - 1);
  if (k == 5) add(Family::FTilde, 4);
  if (k == 3) add(Family::GTilde, 2);
  if (k >= 2) add(Family::TwistedAEven, 2 * (k - 1));
  if (k >= 4) add(Family::TwistedAOdd, 2 * k - 3);
  if (k >= 3) add(Family::TwistedD, k);
  if (k == 5) add(Family::TwistedE6, 6);
  if (k == 3) add(Family::TwistedD4, 4);
  return out;
}

std::vector<long long> row_signature(const IntMatrix& m, int i) {
  std::vector<long long> sig;
  sig.push_back(m[i][i]);
  std::vector<long long> off;
  for (int j = 0; j < (int)m.size(); ++j)
    if (j != i && (m[i][j] != 0 || m[j][i] != 0)) {
      off.push_back(m[i][j] * 100 + m[j][i]);
    }
  std::sort(off.begin(), off.end());
  sig.insert(sig.end(), off.begin(), off.end());
  return sig;
}

// Is there a bijection sigma with a[sigma(i)][sigma(j)] == b[i][j]?
bool permutation_conjugate(const IntMatrix& a, const IntMatrix& b) {
  const int n = (int)a.size();
  if ((int)b.size() != n) return false;
  std::vector<std::vector<long long>> siga(n), sigb(n);
  for (int i = 0; i < n; ++i) {
    siga[i] = row_signature(a, i);
    sigb[i] = row_signature(b, i);
  }
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || siga[v] != sigb[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (a[v][sigma[j]] != b[i][j] || a[sigma[j]][v] != b[j][i]) ok = false;
      if (!ok) continue;
      sigma[i] = v;
      used[v] = true;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::optional<TypeList> classify_cartan(const IntMatrix& c) {
  const int n = (int)c.size();
  for (int i = 0; i < n; ++i) {
    if ((int)c[i].size() != n) throw std::invalid_argument("cartan matrix not square");
    if (c[i][i] != 2) throw std::invalid_argument("cartan matrix needs 2 on the diagonal");
    for (int j = 0; j < n; ++j) {
      if (i != j && c[i][j] > 0) throw std::invalid_argument("cartan matrix needs off-diagonal <= 0");
      if (i != j && (c[i][j] == 0) != (c[j][i] == 0))
        throw std::invalid_argument("cartan matrix zero pattern must be symmetric");
    }
  }
  // Connected components of the underlying graph.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] != -1) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] == -1 && c[u][v] != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  TypeList out;
  for (int cc = 0; cc < ncomp; ++cc) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (comp[i] == cc) idx.push_back(i);
    const int k = (int)idx.size();
    if (k > 9) return std::nullopt;
    IntMatrix sub(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = c[idx[i]][idx[j]];
    bool found = false;
    for (const auto& t : candidates_with_vertices(k)) {
      if (permutation_conjugate(sub, cartan_matrix(t))) {
        out.push_back(t);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return sorted(std::move(out));
}

int coxeter_number(const DynkinType& t) {
  switch (t.family) {
    case Family::A: return t.sub + 1;
    case Family::B: case Family::C: return 2 * t.sub;
    case Family::D: return 2 * t.sub - 2;
    case Family::E: return t.sub == 6 ? 12 : t.sub == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
    default: throw std::invalid_argument("coxeter_number: not a finite type");
  }
}

namespace {
std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (std::uint64_t)(n - k + i) / (std::uint64_t)i;
  return r;
}
}  // namespace

std::uint64_t seed_count(const DynkinType& t) {
  const int n = t.sub;
  switch (t.family) {
    case Family::A: return binom(2 * n + 2, n + 1) / (std::uint64_t)(n + 2);
    case Family::B: case Family::C: return binom(2 * n, n);
    case Family::D: return (std::uint64_t)(3 * n - 2) * binom(2 * n - 2, n - 1) / (std::uint64_t)n;
    case Family::E: return n == 6 ? 833 : n == 7 ? 4160 : 25080;
    case Family::F: return 105;
    case Family::G: return 8;
    default: throw std::invalid_argument("seed_count: not a finite type");
  }
}

std::uint64_t seed_count(const TypeList& ts) {
  std::uint64_t r = 1;
  for (const auto& t : ts) r *= seed_count(t);
  return r;
}

std::optional<std::vector<int>> bipartite_coloring(const IntMatrix& c) {
  const int n = (int)c.size();
  std::vector<int> col(n, 0);
  for (int i = 0; i < n; ++i) {
    if (col[i] != 0) continue;
    col[i] = 1;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v == u || c[u][v] == 0) continue;
        if (col[v] == 0) {
          col[v] = -col[u];
          stack.push_back(v);
        } else if (col[v] == col[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return col;
}

std::string to_string(const DynkinType& t) {
  switch (t.family) {
    case Family::A: return "A" + std::to_string(t.sub);
    case Family::B: return "B" + std::to_string(t.sub);
    case Family::C: return "C" + std::to_string(t.sub);
    case Family::D: return "D" + std::to_string(t.sub);
    case Family::E: return "E" + std::to_string(t.sub);
    case Family::F: return "F4";
    case Family::G: return "G2";
    case Family::ATilde:
      if (t.p > 0) return "Atilde{" + std::to_string(t.p) + "," + std::to_string(t.q) + "}";
      return "Atilde" + std::to_string(t.sub);
    case Family::BTilde: return "Btilde" + std::to_string(t.sub);
    case Family::CTilde: return "Ctilde" + std::to_string(t.sub);
    case Family::DTilde: return "Dtilde" + std::to_string(t.sub);
    case Family::ETilde: return "Etilde" + std::to_string(t.sub);
    case Family::FTilde: return "Ftilde4";
    case Family::GTilde: return "Gtilde2";
    case Family::TwistedAEven:
    case Family::TwistedAOdd: return "A" + std::to_string(t.sub) + "^(2)";
    case Family::TwistedD: return "D" + std::to_string(t.sub) + "^(2)";
    case Family::TwistedE6: return "E6^(2)";
    case Family::TwistedD4: return "D4^(3)";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(const TypeList& ts) {
  if (ts.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) s += "+";
    s += to_string(ts[i]);
  }
  return s;
}

TypeList sorted(TypeList ts) {
  std::sort(ts.begin(), ts.end());
  return ts;
}

namespace {

std::optional<DynkinType> parse_one(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  auto num = [](const std::string& str, size_t pos, size_t len) -> std::optional<int> {
    if (len == 0) return std::nullopt;
    int v = 0;
    for (size_t i = pos; i < pos + len; ++i) {
      if (!isdigit((unsigned char)str[i])) return std::nullopt;
      v = v * 10 + (str[i] - '0');
    }
    return v;
  };
  auto make = [](Family f, int sub) -> std::optional<DynkinType> {
    DynkinType t{f, sub, 0, 0};
    try {
      cartan_matrix(t);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    return t;
  };
  // Twisted: letter + digits + "^(2)" or "^(3)".
  if (s.size() >= 5 && s.substr(s.size() - 4, 2) == "^(" && s.back() == ')') {
    char fam = s[0];
    char order = s[s.size() - 2];
    auto sub = num(s, 1, s.size() - 5);
    if (!sub) return std::nullopt;
    if (order == '2' && fam == 'A')
      return make(*sub % 2 == 0 ? Family::TwistedAEven : Family::TwistedAOdd, *sub);
    if (order == '2' && fam == 'D') return make(Family::TwistedD, *sub);
    if (order == '2' && fam == 'E' && *sub == 6) return make(Family::TwistedE6, 6);
    if (order == '3' && fam == 'D' && *sub == 4) return make(Family::TwistedD4, 4);
    return std::nullopt;
  }
  // Affine: "Xtilde..." forms.
  if (s.size() > 6 && s.substr(1, 5) == "tilde") {
    char fam = s[0];
    std::string rest = s.substr(6);
    if (fam == 'A' && rest.size() >= 5 && rest.front() == '{' && rest.back() == '}') {
      auto comma = rest.find(',');
      if (comma == std::string::npos) return std::nullopt;
      auto p = num(rest, 1, comma - 1);
      auto q = num(rest, comma + 1, rest.size() - comma - 2);
      if (!p || !q || *p < 1 || *q < 1) return std::nullopt;
      DynkinType t{Family::ATilde, *p + *q - 1, std::min(*p, *q), std::max(*p, *q)};
      try {
        cartan_matrix(t);
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
      return t;
    }
    auto sub = num(rest, 0, rest.size());
    if (!sub) return std::nullopt;
    switch (fam) {
      case 'A': return make(Family::ATilde, *sub);
      case 'B': return make(Family::BTilde, *sub);
      case 'C': return make(Family::CTilde, *sub);
      case 'D': return make(Family::DTilde, *sub);
      case 'E': return make(Family::ETilde, *sub);
      case 'F': return make(Family::FTilde, *sub);
      case 'G': return make(Family::GTilde, *sub);
      default: return std::nullopt;
    }
  }
  auto sub = num(s, 1, s.size() - 1);
  if (!sub) return std::nullopt;
  switch (s[0]) {
    case 'A': return make(Family::A, *sub);
    case 'B': return make(Family::B, *sub);
    case 'C': return make(Family::C, *sub);
    case 'D': return make(Family::D, *sub);
    case 'E': return make(Family::E, *sub);
    case 'F': return make(Family::F, *sub);
    case 'G': return make(Family::G, *sub);
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<TypeList> parse_type(const std::string& s) {
  if (s == "0") return TypeList{};
  TypeList out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t plus = s.find('+', pos);
    std::string part = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    auto t = parse_one(part);
    if (!t) return std::nullopt;
    out.push_back(*t);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return sorted(std::move(out));
}

}  // namespace weaveclust
