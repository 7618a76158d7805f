#include "weaveclust/braids.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>

#include "weaveclust/mutation_core.hpp"

namespace weaveclust {

void validate(const BraidWord& w) {
  if (w.strands < 2) throw std::invalid_argument("braid: need at least 2 strands");
  for (int g : w.letters)
    if (g < 1 || g >= w.strands)
      throw std::invalid_argument("braid: letter out of range");
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    int g = w.letters[i];
    std::size_t j = i;
    while (j + 1 < w.letters.size() && w.letters[j + 1] == g) ++j;
    out += "s" + std::to_string(g);
    if (j > i) out += "^" + std::to_string(j - i + 1);
    i = j;
  }
  if (out.empty()) out = "1";
  return out;
}

std::vector<int> strand_permutation(const BraidWord& w) {
  // at[slot] = strand occupying the slot; crossing g swaps slots g-1, g.
  std::vector<int> at(w.strands);
  for (int s = 0; s < w.strands; ++s) at[s] = s;
  for (int g : w.letters) std::swap(at[g - 1], at[g]);
  std::vector<int> res(w.strands);
  for (int s = 0; s < w.strands; ++s) res[at[s]] = s;
  return res;
}

namespace {

void append_power(BraidWord& w, int g, int e) {
  for (int i = 0; i < e; ++i) w.letters.push_back(g);
}

}  // namespace

BraidWord beta0_linear(int n) {
  if (n < 1) throw std::invalid_argument("beta0_linear: n >= 1");
  BraidWord w{2, {}};
  append_power(w, 1, n + 1);
  return w;
}

BraidWord beta_linear(int n) {
  if (n < 1) throw std::invalid_argument("beta_linear: n >= 1");
  BraidWord w{2, {}};
  append_power(w, 1, n + 3);
  return w;
}

BraidWord beta0_tripod(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("beta0_tripod: a,b,c >= 1");
  BraidWord w{3, {}};
  append_power(w, 1, 1);
  append_power(w, 2, a);
  append_power(w, 1, b - 1);
  append_power(w, 2, c);
  return w;
}

BraidWord beta_tripod(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("beta_tripod: a,b,c >= 1");
  BraidWord w{3, {}};
  for (int e : {a, b, c}) {
    append_power(w, 2, 1);
    append_power(w, 1, e + 1);
  }
  return w;
}

BraidWord beta0_affine_d(int n) {
  if (n < 4) throw std::invalid_argument("beta0_affine_d: n >= 4");
  BraidWord w{4, {}};
  append_power(w, 3, 1);
  append_power(w, 2, 2);
  append_power(w, 3, 1);
  append_power(w, 2, n - 4);
  append_power(w, 1, 1);
  append_power(w, 2, 2);
  append_power(w, 1, 1);
  return w;
}

BraidWord beta_affine_d(int n) {
  if (n < 4) throw std::invalid_argument("beta_affine_d: n >= 4");
  BraidWord w{4, {}};
  const int k = (n - 3) / 2, l = (n - 4) / 2;
  for (int tail : {k, l}) {
    for (int rep = 0; rep < 2; ++rep) {
      append_power(w, 2, 1);
      append_power(w, 1, 3);
    }
    append_power(w, 2, 1);
    append_power(w, 1, tail);
    append_power(w, 3, 1);
  }
  return w;
}

BraidWord stabilize(const BraidWord& w) {
  validate(w);
  const int nn = w.strands - 1;
  BraidWord s{w.strands + 1, w.letters};
  for (int g = nn; g >= 2; --g) s.letters.push_back(g);
  append_power(s, 1, 3);
  for (int g = 2; g <= nn; ++g) s.letters.push_back(g);
  return s;
}

BraidWord apply_step(const BraidWord& w, const BraidStep& s) {
  BraidWord out = w;
  const int len = static_cast<int>(w.letters.size());
  switch (s.kind) {
    case BraidStep::FarCommute: {
      if (s.pos < 0 || s.pos + 1 >= len) throw std::invalid_argument("step: pos");
      int x = out.letters[s.pos], y = out.letters[s.pos + 1];
      if (std::abs(x - y) < 2) throw std::invalid_argument("step: letters not far");
      std::swap(out.letters[s.pos], out.letters[s.pos + 1]);
      return out;
    }
    case BraidStep::BraidMove: {
      if (s.pos < 0 || s.pos + 2 >= len) throw std::invalid_argument("step: pos");
      int x = out.letters[s.pos], y = out.letters[s.pos + 1];
      if (out.letters[s.pos + 2] != x || std::abs(x - y) != 1)
        throw std::invalid_argument("step: not a braid-move site");
      out.letters[s.pos] = y;
      out.letters[s.pos + 1] = x;
      out.letters[s.pos + 2] = y;
      return out;
    }
    case BraidStep::Rotate: {
      if (len > 1) std::rotate(out.letters.begin(), out.letters.begin() + 1, out.letters.end());
      return out;
    }
  }
  throw std::logic_error("step: bad kind");
}

namespace {

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> lengths;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t effective_budget(std::uint64_t budget) {
  if (budget != 0) return budget;
  if (const char* env = std::getenv("WEAVECLUST_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

}  // namespace

BraidEquivalence braid_equivalent(const BraidWord& a, const BraidWord& b,
                                  std::uint64_t budget) {
  validate(a);
  validate(b);
  BraidEquivalence res;
  if (a.strands != b.strands || a.letters.size() != b.letters.size()) {
    res.verdict = BraidEquivalence::No;
    return res;
  }
  if (cycle_type(strand_permutation(a)) != cycle_type(strand_permutation(b))) {
    res.verdict = BraidEquivalence::No;
    return res;
  }
  const std::uint64_t cap = effective_budget(budget);

  std::map<std::vector<int>, std::pair<std::vector<int>, BraidStep>> parent;
  std::queue<std::vector<int>> frontier;
  parent.emplace(a.letters, std::make_pair(std::vector<int>{}, BraidStep{}));
  frontier.push(a.letters);
  res.explored = 1;

  auto found = [&](const std::vector<int>& target) {
    return parent.find(target) != parent.end();
  };

  bool truncated = false;
  while (!frontier.empty() && !found(b.letters)) {
    std::vector<int> cur = frontier.front();
    frontier.pop();
    BraidWord w{a.strands, cur};
    const int len = static_cast<int>(cur.size());
    std::vector<BraidStep> steps;
    for (int i = 0; i + 1 < len; ++i)
      if (std::abs(cur[i] - cur[i + 1]) >= 2) steps.push_back({BraidStep::FarCommute, i});
    for (int i = 0; i + 2 < len; ++i)
      if (cur[i] == cur[i + 2] && std::abs(cur[i] - cur[i + 1]) == 1)
        steps.push_back({BraidStep::BraidMove, i});
    steps.push_back({BraidStep::Rotate, 0});
    for (const BraidStep& s : steps) {
      std::vector<int> next = apply_step(w, s).letters;
      if (parent.count(next)) continue;
      if (res.explored >= cap) {
        truncated = true;
        break;
      }
      parent.emplace(next, std::make_pair(cur, s));
      frontier.push(next);
      ++res.explored;
    }
    if (truncated) break;
  }

  if (!found(b.letters)) {
    res.verdict = truncated ? BraidEquivalence::Unknown : BraidEquivalence::No;
    return res;
  }

  std::vector<BraidStep> rev;
  for (std::vector<int> cur = b.letters; cur != a.letters;) {
    const auto& [prev, step] = parent.at(cur);
    rev.push_back(step);
    cur = prev;
  }
  res.trace.assign(rev.rbegin(), rev.rend());

  BraidWord replay = a;
  for (const BraidStep& s : res.trace) replay = apply_step(replay, s);
  if (replay != b) throw std::logic_error("braid_equivalent: trace replay mismatch");
  res.verdict = BraidEquivalence::Yes;
  return res;
}

std::vector<Brick> bricks(const BraidWord& w) {
  validate(w);
  std::vector<Brick> out;
  for (int level = 1; level < w.strands; ++level) {
    std::vector<int> pos;
    for (std::size_t i = 0; i < w.letters.size(); ++i)
      if (w.letters[i] == level) pos.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i + 1 < pos.size(); ++i)
      out.push_back({level, pos[i], pos[i + 1]});
  }
  return out;
}

IntMatrix brick_quiver(const BraidWord& w) {
  const std::vector<Brick> bs = bricks(w);
  const int n = static_cast<int>(bs.size());
  IntMatrix q(n, std::vector<long long>(n, 0));
  auto arrow = [&](int i, int j) {
    q[i][j] += 1;
    q[j][i] -= 1;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Brick &x = bs[i], &y = bs[j];
      if (x.level == y.level && y.left == x.right) arrow(i, j);
      if (y.level != x.level + 1) continue;
      // bs is (level, left)-sorted, so x is the lower brick.
      if (y.left < x.left && x.left < y.right && y.right < x.right) arrow(i, j);
      if (x.left < y.left && y.left < x.right && x.right < y.right) arrow(j, i);
    }
  }
  return q;
}

std::optional<TypeList> brick_type(const BraidWord& w, std::size_t node_budget) {
  return classify_type(brick_quiver(w), node_budget);
}

}  // namespace weaveclust
