#pragma once
#include <optional>
#include <string>
#include <vector>

#include "weaveclust/dynkin.hpp"

namespace weaveclust {

// m x n matrix whose first n rows form the principal (mutable) part; rows
// n..m-1 are coefficient rows. All indices are 0-based.
struct ExchangeMatrix {
  int m = 0, n = 0;
  IntMatrix b;

  static ExchangeMatrix square(IntMatrix bb);
  // Stacks an identity below the principal part (principal coefficients).
  static ExchangeMatrix with_principal_coeffs(IntMatrix bb);

  const IntMatrix& rows() const { return b; }
  IntMatrix principal() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

// Throws std::invalid_argument unless dimensions are coherent and the
// principal part is skew-symmetrizable.
void validate(const ExchangeMatrix& bm);

// Minimal positive integer diagonal d with d_i b_ij = -d_j b_ji on the
// principal part; nullopt when none exists.
std::optional<std::vector<long long>> skew_symmetrizer(const IntMatrix& b);

ExchangeMatrix mutate(const ExchangeMatrix& bm, int k);

// Mutation word; by convention the stored list is applied right to left
// (the last index mutates first), matching composition order.
struct MutationSequence {
  std::vector<int> ks;
};
ExchangeMatrix apply(const ExchangeMatrix& bm, const MutationSequence& seq);

IntMatrix cartan_counterpart(const IntMatrix& b);

// True when the quiver has no directed cycle through positive entries.
bool is_acyclic(const IntMatrix& b);

// +1 for sources, -1 for sinks, +1 for isolated vertices; nullopt when some
// vertex has both incoming and outgoing arrows.
std::optional<std::vector<int>> quiver_bipartition(const IntMatrix& b);

// For a bipartite quiver, the mutation word that mutates every sink first
// and then every source (stored in composition order: sources then sinks).
MutationSequence coxeter_mutation(const IntMatrix& b);

// Identical matrices up to simultaneous permutation of rows/columns of the
// principal part get equal keys (exact for n <= 9).
std::string canonical_quiver_key(const IntMatrix& b);

// Mutation-class classification: breadth-first search for an acyclic
// representative, classified through its Cartan counterpart; cyclically
// oriented n-cycles (n >= 4) classify as D_n directly, and acyclic n-cycle
// orientations with p co- and q counter-clockwise arrows as Atilde{p,q}.
// nullopt when the class has no catalog match or the budget is exhausted.
std::optional<TypeList> classify_type(const IntMatrix& b, long long node_budget = 100000);

// Matrix rank over the rationals (fraction-free elimination).
int matrix_rank(const IntMatrix& b);

}  // namespace weaveclust
