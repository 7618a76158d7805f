#pragma once
#include <optional>
#include <string>
#include <vector>

#include "weaveclust/mutation_core.hpp"
#include "weaveclust/ratfun.hpp"

namespace weaveclust {

// Coefficient seed: n rational functions in the n initial variables.
struct YSeed {
  std::vector<RationalFunction> y;
  ExchangeMatrix b;  // square
  static YSeed initial(IntMatrix b);
  friend bool operator==(const YSeed&, const YSeed&) = default;
};
YSeed mutate(const YSeed& s, int k);

// Cluster seed: m rational functions (mutable then frozen) in m variables.
// Mutation is enforced only up to mutable rank 4.
struct XSeed {
  std::vector<RationalFunction> x;
  ExchangeMatrix b;
  static XSeed initial(ExchangeMatrix b);
  friend bool operator==(const XSeed&, const XSeed&) = default;
};
XSeed mutate(const XSeed& s, int k);

// Principal-coefficient seed tracked purely through the 2n x n matrix.
struct PCSeed {
  ExchangeMatrix bc;  // B stacked over C
  static PCSeed initial(IntMatrix b);
  IntMatrix bpart() const;
  IntMatrix cpart() const;
  friend bool operator==(const PCSeed&, const PCSeed&) = default;
};
PCSeed mutate(const PCSeed& s, int k);

// Canonical byte keys: equal exactly for seeds related by a relabeling
// sigma of the mutable indices (y'_i = y_sigma(i), b'_ij = b_sigma(i)sigma(j);
// for PC seeds the coefficient rows stay fixed and only their columns move).
std::string seed_key(const YSeed& s);
std::string seed_key(const PCSeed& s);

struct ExchangeGraph {
  bool complete = true;
  std::vector<std::string> keys;       // node -> key, BFS discovery order
  std::vector<std::vector<int>> adj;   // node x mutation index -> node (-1 if unexplored)
  std::vector<std::vector<int>> parent;  // node -> (parent node, mutation index); empty for root
  int node_of(const std::string& key) const;
};

ExchangeGraph exchange_graph_y(const IntMatrix& b, long long max_nodes);
ExchangeGraph exchange_graph_pc(const IntMatrix& b, long long max_nodes);

// Runs both backends in lockstep along identical mutation words and checks
// the induced key correspondence is a bijection that matches every edge
// label; true means the two exchange graphs are edge-label isomorphic.
bool backends_agree(const IntMatrix& b, long long max_nodes);

template <class Seed>
Seed apply(Seed s, const MutationSequence& seq) {
  for (auto it = seq.ks.rbegin(); it != seq.ks.rend(); ++it) s = mutate(s, *it);
  return s;
}

struct CoxeterOrder {
  bool finite = false;
  long long value = 0;  // order if finite, else the exhausted budget
};

// Keys of mu_Q^r applied to s for r = 0..r_max.
std::vector<std::string> coxeter_orbit(const PCSeed& s, int r_max);
std::vector<std::string> coxeter_orbit(const YSeed& s, int r_max);

// Smallest r >= 1 with mu_Q^r(s) equivalent to s.
CoxeterOrder coxeter_order(const PCSeed& s, long long budget);
CoxeterOrder coxeter_order(const YSeed& s, long long budget);

// Witness that target is reachable as (a mutation word avoiding one index)
// applied to some belt seed mu_Q^r(initial); replay-verified before return.
struct NormalFormWitness {
  int r = 0;
  int avoided = 0;
  MutationSequence word;  // applied right to left to mu_Q^r(initial)
};
std::optional<NormalFormWitness> normal_form_witness(const IntMatrix& b0,
                                                     const std::string& target_key,
                                                     long long budget);

// Bipartite exchange matrix for a finite catalog type: |b_ij| = |c_ij| with
// sources on the +1 color class (smallest vertex of each component is +1).
IntMatrix bipartite_exchange_matrix(const TypeList& ts);

}  // namespace weaveclust
