#include <stdexcept>

#include "weaveclust/ngraph.hpp"

namespace weaveclust {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("ngraph: " + msg);
}

constexpr auto kBoundary = NGraphVertexKind::Boundary;
constexpr auto kTrivalent = NGraphVertexKind::Trivalent;
constexpr auto kHexagonal = NGraphVertexKind::Hexagonal;
constexpr auto kCrossing = NGraphVertexKind::Crossing;

}  // namespace

// Chain of n+1 trivalent vertices along the equator, legs alternating below
// (even interiors) and above (odd interiors), two extra legs at each end;
// boundary word 1^{n+3}. Cycle i is the I-cycle on chain edge e_i.
NGraphWithCycles build_linear(int n) {
  if (n < 1) fail("build_linear needs n >= 1");
  NGraphBuilder bld(2);
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = bld.add_vertex(kTrivalent);
  std::vector<int> e(n + 1, -1);
  for (int i = 1; i <= n; ++i) e[i] = bld.add_edge(v[i - 1], v[i], 1);

  std::vector<int> outer;
  auto leg = [&](int u) {
    const int bv = bld.add_vertex(kBoundary);
    outer.push_back(bv);
    return bld.add_edge(u, bv, 1);
  };
  // Counterclockwise from the west end: two legs at v0, south legs of even
  // interiors west to east, two legs at vn, north legs of odd interiors
  // east to west.
  const int l0a = leg(v[0]), l0b = leg(v[0]);
  std::vector<int> mid_leg(n, -1);
  for (int i = 2; i <= n - 1; i += 2) mid_leg[i] = leg(v[i]);
  const int lna = leg(v[n]), lnb = leg(v[n]);
  for (int i = n - 1 - (n % 2); i >= 1; i -= 2) mid_leg[i] = leg(v[i]);

  bld.set_rotation(v[0], {e[1], l0a, l0b});
  for (int i = 1; i <= n - 1; ++i) {
    if (i % 2 == 1)
      bld.set_rotation(v[i], {e[i], e[i + 1], mid_leg[i]});
    else
      bld.set_rotation(v[i], {e[i], mid_leg[i], e[i + 1]});
  }
  bld.set_rotation(v[n], {e[n], lna, lnb});

  std::vector<CycleSpec> cycles;
  for (int i = 1; i <= n; ++i) cycles.push_back({CycleKind::I, {e[i]}});
  return with_cycles(bld.build(std::move(outer)), std::move(cycles));
}

// Central hexagon with three color-2 rays to the boundary and three color-1
// arms of lengths a, b, c; boundary word 2 1^{a+1} 2 1^{b+1} 2 1^{c+1}.
// Cycles: the central Y on the three arm-base edges, then the arm chain
// edges as I-cycles, arm by arm.
NGraphWithCycles build_tripod(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) fail("build_tripod needs a, b, c >= 1");
  NGraphBuilder bld(3);
  const int O = bld.add_vertex(kHexagonal);
  const int lens[3] = {a, b, c};
  std::vector<std::vector<int>> u(3);
  for (int s = 0; s < 3; ++s)
    for (int j = 0; j < lens[s]; ++j) u[s].push_back(bld.add_vertex(kTrivalent));

  std::vector<int> y(3);
  std::vector<std::vector<int>> f(3);
  for (int s = 0; s < 3; ++s) {
    y[s] = bld.add_edge(O, u[s][0], 1);
    for (int j = 0; j + 1 < lens[s]; ++j)
      f[s].push_back(bld.add_edge(u[s][j], u[s][j + 1], 1));
  }

  std::vector<int> outer;
  auto leg = [&](int w, int color) {
    const int bv = bld.add_vertex(kBoundary);
    outer.push_back(bv);
    return bld.add_edge(w, bv, color);
  };

  std::vector<int> ray(3);
  for (int s = 0; s < 3; ++s) {
    const int x = lens[s];
    ray[s] = leg(O, 2);
    // Walking counterclockwise past the arm: clockwise-side legs of even
    // vertices base to tip, the tip's axis leg, then counterclockwise-side
    // legs of odd vertices tip to base.
    if (x == 1) {
      const int lr = leg(u[s][0], 1), ll = leg(u[s][0], 1);
      bld.set_rotation(u[s][0], {lr, ll, y[s]});
      continue;
    }
    std::vector<int> vleg(x + 1, -1);
    for (int j = 2; j <= x; j += 2) vleg[j] = leg(u[s][j - 1], 1);
    const int axis = leg(u[s][x - 1], 1);
    for (int j = x - 1 + (x % 2); j >= 1; j -= 2) vleg[j] = leg(u[s][j - 1], 1);

    bld.set_rotation(u[s][0], {f[s][0], vleg[1], y[s]});
    for (int j = 2; j <= x - 1; ++j) {
      if (j % 2 == 0)
        bld.set_rotation(u[s][j - 1], {f[s][j - 1], f[s][j - 2], vleg[j]});
      else
        bld.set_rotation(u[s][j - 1], {f[s][j - 1], vleg[j], f[s][j - 2]});
    }
    if (x % 2 == 0)
      bld.set_rotation(u[s][x - 1], {f[s][x - 2], vleg[x], axis});
    else
      bld.set_rotation(u[s][x - 1], {f[s][x - 2], axis, vleg[x]});
  }
  bld.set_rotation(O, {ray[0], y[0], ray[1], y[1], ray[2], y[2]});

  std::vector<CycleSpec> cycles;
  cycles.push_back({CycleKind::YUpper, {y[0], y[1], y[2]}});
  for (int s = 0; s < 3; ++s)
    for (int fe : f[s]) cycles.push_back({CycleKind::I, {fe}});
  return with_cycles(bld.build(std::move(outer)), std::move(cycles));
}

// Two hexagons joined by a trivalent spine with forked ends, plus one color-3
// strand crossing the spine diagonally; boundary word cyclically equal to the
// annular affine-D braid word. Cycles: left Y, the two left fork I-cycles,
// the interior spine cycles west to east, right Y, the two right fork
// I-cycles (for n = 4 the two Y's merge into one six-edge Y).
NGraphWithCycles build_affine_d(int n) {
  if (n < 4) fail("build_affine_d needs n >= 4");
  const int M = n - 4;                  // number of spine middles
  const int k = (n - 3) / 2;            // spine edge k+1 carries the crossing
  NGraphBuilder bld(4);

  const int hL = bld.add_vertex(kHexagonal);
  const int tU = bld.add_vertex(kTrivalent), tU2 = bld.add_vertex(kTrivalent);
  const int tD = bld.add_vertex(kTrivalent), tD2 = bld.add_vertex(kTrivalent);
  std::vector<int> m(M + 1, -1);  // 1-based
  for (int j = 1; j <= M; ++j) m[j] = bld.add_vertex(kTrivalent);
  const int hR = bld.add_vertex(kHexagonal);
  const int RU = bld.add_vertex(kTrivalent), RU2 = bld.add_vertex(kTrivalent);
  const int RD = bld.add_vertex(kTrivalent), RD2 = bld.add_vertex(kTrivalent);

  // The color-3 strand runs top-left to bottom-right: it crosses the up legs
  // of even middles j <= k, then spine edge k+1, then the down legs of odd
  // middles j > k.
  std::vector<int> cross_of_leg(M + 1, -1);
  std::vector<int> chain;  // crossings top to bottom
  for (int j = 2; j <= k; j += 2) {
    cross_of_leg[j] = bld.add_vertex(kCrossing);
    chain.push_back(cross_of_leg[j]);
  }
  const int XS = bld.add_vertex(kCrossing);
  chain.push_back(XS);
  for (int j = k + 1; j <= M; ++j)
    if (j % 2 == 1) {
      cross_of_leg[j] = bld.add_vertex(kCrossing);
      chain.push_back(cross_of_leg[j]);
    }

  // Spine edges 1..M+1 between hL, m1..mM, hR; edge k+1 is split at XS.
  auto node = [&](int t) { return t == 0 ? hL : (t == M + 1 ? hR : m[t]); };
  std::vector<int> spineL(M + 2, -1), spineR(M + 2, -1);
  for (int t = 1; t <= M + 1; ++t) {
    if (t == k + 1) {
      spineL[t] = bld.add_edge(node(t - 1), XS, 1);
      spineR[t] = bld.add_edge(XS, node(t), 1);
    } else {
      spineL[t] = spineR[t] = bld.add_edge(node(t - 1), node(t), 1);
    }
  }
  const int forkU = bld.add_edge(hL, tU, 1), fU2 = bld.add_edge(tU, tU2, 1);
  const int forkD = bld.add_edge(hL, tD, 1), fD2 = bld.add_edge(tD, tD2, 1);
  const int forkRU = bld.add_edge(hR, RU, 1), fRU2 = bld.add_edge(RU, RU2, 1);
  const int forkRD = bld.add_edge(hR, RD, 1), fRD2 = bld.add_edge(RD, RD2, 1);
  // Inner halves of crossed legs, and the strand segments between crossings.
  std::vector<int> leg_inner(M + 1, -1);
  for (int j = 1; j <= M; ++j)
    if (cross_of_leg[j] != -1)
      leg_inner[j] = bld.add_edge(m[j], cross_of_leg[j], 1);
  std::vector<int> green(chain.size() + 1, -1);  // green[t] enters chain[t]
  for (std::size_t t = 0; t + 1 < chain.size(); ++t)
    green[t + 1] = bld.add_edge(chain[t], chain[t + 1], 3);

  std::vector<int> outer;
  auto leg = [&](int w, int color) {
    const int bv = bld.add_vertex(kBoundary);
    outer.push_back(bv);
    return bld.add_edge(w, bv, color);
  };

  // Left wall, top to bottom.
  const int legU2side = leg(tU2, 1);
  const int rOutL = leg(hL, 2);
  const int legDside = leg(tD, 1);
  const int legD2side = leg(tD2, 1);
  // Bottom wall, west to east: down legs belong to odd middles.
  const int legD2down = leg(tD2, 1);
  const int rDownL = leg(hL, 2);
  std::vector<int> mid_leg(M + 1, -1);  // boundary-side leg per middle
  for (int j = 1; j <= M; j += 2)
    mid_leg[j] = leg(cross_of_leg[j] == -1 ? m[j] : cross_of_leg[j], 1);
  green[chain.size()] = leg(chain.back(), 3);
  const int rDownR = leg(hR, 2);
  int legRDdown = -1, legRD2down = -1, legRD2side = -1, legRDside = -1;
  int legRUside = -1, legRU2side = -1, legRU2up = -1, legRUup = -1;
  if (n % 2 == 0) {
    legRDdown = leg(RD, 1);
    legRD2down = leg(RD2, 1);
    // Right wall, bottom to top.
    legRD2side = leg(RD2, 1);
    const int rOutR = leg(hR, 2);
    legRUside = leg(RU, 1);
    legRU2side = leg(RU2, 1);
    // Top wall, east to west.
    legRU2up = leg(RU2, 1);
    const int rUpR = leg(hR, 2);
    bld.set_rotation(RU, {forkRU, legRUside, fRU2});
    bld.set_rotation(RU2, {fRU2, legRU2side, legRU2up});
    bld.set_rotation(RD, {forkRD, legRDdown, fRD2});
    bld.set_rotation(RD2, {fRD2, legRD2down, legRD2side});
    bld.set_rotation(hR, {spineR[M + 1], rDownR, forkRD, rOutR, forkRU, rUpR});
  } else {
    legRD2down = leg(RD2, 1);
    // Right wall, bottom to top.
    legRD2side = leg(RD2, 1);
    legRDside = leg(RD, 1);
    const int rOutR = leg(hR, 2);
    legRU2side = leg(RU2, 1);
    // Top wall, east to west.
    legRU2up = leg(RU2, 1);
    legRUup = leg(RU, 1);
    const int rUpR = leg(hR, 2);
    bld.set_rotation(RU, {forkRU, fRU2, legRUup});
    bld.set_rotation(RU2, {fRU2, legRU2side, legRU2up});
    bld.set_rotation(RD, {forkRD, fRD2, legRDside});
    bld.set_rotation(RD2, {fRD2, legRD2down, legRD2side});
    bld.set_rotation(hR, {spineR[M + 1], rDownR, forkRD, rOutR, forkRU, rUpR});
  }
  // Up legs of even middles, east to west.
  for (int j = M - (M % 2); j >= 2; j -= 2)
    mid_leg[j] = leg(cross_of_leg[j] == -1 ? m[j] : cross_of_leg[j], 1);
  green[0] = leg(chain.front(), 3);
  const int rUpL = leg(hL, 2);
  const int legUup = leg(tU, 1);
  const int legU2up = leg(tU2, 1);

  bld.set_rotation(hL, {spineL[1], rUpL, forkU, rOutL, forkD, rDownL});
  bld.set_rotation(tU, {forkU, legUup, fU2});
  bld.set_rotation(tU2, {fU2, legU2up, legU2side});
  bld.set_rotation(tD, {forkD, legDside, fD2});
  bld.set_rotation(tD2, {fD2, legD2side, legD2down});
  for (int j = 1; j <= M; ++j) {
    const int lj = cross_of_leg[j] == -1 ? mid_leg[j] : leg_inner[j];
    if (j % 2 == 1)
      bld.set_rotation(m[j], {spineR[j], lj, spineL[j + 1]});
    else
      bld.set_rotation(m[j], {spineR[j], spineL[j + 1], lj});
  }
  // Crossings: the strand passes upper-left to lower-right.
  for (std::size_t t = 0; t < chain.size(); ++t) {
    const int X = chain[t];
    const int up_green = green[t], down_green = green[t + 1];
    if (X == XS) {
      bld.set_rotation(X, {spineR[k + 1], up_green, spineL[k + 1], down_green});
      continue;
    }
    int j = -1;
    for (int jj = 1; jj <= M; ++jj)
      if (cross_of_leg[jj] == X) j = jj;
    if (j % 2 == 0)  // crossed up leg: stub above, middle below
      bld.set_rotation(X, {mid_leg[j], up_green, leg_inner[j], down_green});
    else  // crossed down leg: middle above, stub below
      bld.set_rotation(X, {leg_inner[j], up_green, mid_leg[j], down_green});
  }

  std::vector<CycleSpec> cycles;
  if (n == 4) {
    cycles.push_back({CycleKind::YUpper,
                      {forkU, forkD, spineL[1], spineR[1], forkRU, forkRD}});
    cycles.push_back({CycleKind::I, {fU2}});
    cycles.push_back({CycleKind::I, {fD2}});
    cycles.push_back({CycleKind::I, {fRU2}});
    cycles.push_back({CycleKind::I, {fRD2}});
  } else {
    cycles.push_back({CycleKind::YUpper, {spineL[1], forkU, forkD}});
    cycles.push_back({CycleKind::I, {fU2}});
    cycles.push_back({CycleKind::I, {fD2}});
    for (int t = 2; t <= M; ++t) {
      if (t == k + 1)
        cycles.push_back({CycleKind::LongI, {spineL[t], spineR[t]}});
      else
        cycles.push_back({CycleKind::I, {spineL[t]}});
    }
    if (k + 1 == M + 1)
      cycles.push_back({CycleKind::YUpper,
                        {spineL[M + 1], spineR[M + 1], forkRU, forkRD}});
    else
      cycles.push_back({CycleKind::YUpper, {spineL[M + 1], forkRU, forkRD}});
    cycles.push_back({CycleKind::I, {fRU2}});
    cycles.push_back({CycleKind::I, {fRD2}});
  }
  return with_cycles(bld.build(std::move(outer)), std::move(cycles));
}

}  // namespace weaveclust
