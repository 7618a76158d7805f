#pragma once
#include <optional>
#include <string>
#include <vector>

#include "weaveclust/seeds.hpp"

namespace weaveclust {

// Finite permutation group acting on 0..degree-1, given by generators.
struct GroupAction {
  int degree = 0;
  std::vector<std::vector<int>> gens;
};

void validate(const GroupAction& a);
std::vector<std::vector<int>> group_elements(const GroupAction& a);
// Orbits sorted by smallest element; each orbit sorted.
std::vector<std::vector<int>> group_orbits(const GroupAction& a);
// Same action on indices 0..n-1 and their frozen mirrors n..2n-1.
GroupAction extend_to_frozen(const GroupAction& a);

// b[g(i)][g(j)] == b[i][j] for every generator (square matrices).
bool is_invariant(const IntMatrix& b, const GroupAction& a);

struct AdmissibilityReport {
  bool ok = false;
  std::string violation;  // empty when ok; else names the failed condition
  int i = -1, j = -1;     // witness indices (0-based)
};

// Conditions checked in order: (a) orbits may not mix mutable and frozen
// indices, (b) b_{i,i'} = 0 for distinct i ~ i', (c) b_{i,j} b_{i',j} >= 0
// for i ~ i' and every j.
AdmissibilityReport is_admissible(const IntMatrix& b, const GroupAction& a,
                                  int n_mutable = -1);

struct FoldedMatrix {
  std::vector<std::vector<int>> row_orbits;
  std::vector<std::vector<int>> col_orbits;
  IntMatrix b;
};

// b^G_{I,J} = sum_{i in I} b_{i,j}, with independence of the representative
// j in J checked; requires invariance and admissibility.
FoldedMatrix fold_matrix(const IntMatrix& b, const GroupAction& a);
// Folds B and C parts of a principal-coefficient seed (frozen mirrors move
// with their mutable indices).
PCSeed fold_seed(const PCSeed& s, const GroupAction& a);

// Composite mutation over one orbit (commuting by admissibility (b)).
IntMatrix orbit_mutate(const IntMatrix& b, const GroupAction& a, int orbit_index);
PCSeed orbit_mutate(const PCSeed& s, const GroupAction& a, int orbit_index);

// Breadth-first search over orbit mutations: true when every reachable
// matrix is invariant and admissible and the search closes; false when a
// violation is reached; nullopt when the budget runs out first.
std::optional<bool> is_globally_foldable(const IntMatrix& b, const GroupAction& a,
                                         long long budget,
                                         std::string* violation = nullptr);

struct FoldedExchangeGraph {
  bool complete = true;
  std::vector<std::string> keys;  // canonical keys of folded seeds
  std::vector<std::vector<int>> adj;  // node x orbit index -> node
};

// Exchange graph of the folded seed pattern, driven by orbit mutations of
// the unfolded principal-coefficient seed. Throws std::runtime_error if a
// reached seed fails invariance or admissibility.
FoldedExchangeGraph folded_exchange_graph(const IntMatrix& b, const GroupAction& a,
                                          long long max_nodes);

struct FoldingTriple {
  std::string name;       // e.g. "A5/Z2"
  TypeList unfolded;
  TypeList folded;
  IntMatrix b;            // invariant initial exchange matrix
  GroupAction action;
};

// The finite folding instances exercised by the acceptance suite.
std::vector<FoldingTriple> finite_folding_triples();
// Affine instances kept for documentation and classification tests.
std::vector<FoldingTriple> affine_folding_triples();

}  // namespace weaveclust
