#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weaveclust {

using IntMatrix = std::vector<std::vector<long long>>;

// Families of generalized Cartan matrices we classify against: the finite
// series, the untwisted affine series, and the twisted affine series.
enum class Family {
  A, B, C, D, E, F, G,
  ATilde, BTilde, CTilde, DTilde, ETilde, FTilde, GTilde,
  TwistedAEven,  // A_{2l}^(2)
  TwistedAOdd,   // A_{2l-1}^(2), l >= 3
  TwistedD,      // D_{v}^(2), v >= 3
  TwistedE6,     // E_6^(2)
  TwistedD4,     // D_4^(3)
};

struct DynkinType {
  Family family;
  int sub;        // subscript in the conventional name, e.g. 4 in "D4"
  int p = 0;      // for ATilde only: orientation pair {p,q} when known,
  int q = 0;      // stored with p <= q; 0,0 when unknown. p+q = sub+1.

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

// A (possibly empty) sorted multiset of irreducible types.
using TypeList = std::vector<DynkinType>;

bool is_finite(const DynkinType& t);
int vertex_count(const DynkinType& t);
int vertex_count(const TypeList& ts);

// Generalized Cartan matrix in the fixed catalog numbering (block diagonal
// for lists). Throws std::invalid_argument for out-of-range subscripts.
IntMatrix cartan_matrix(const DynkinType& t);
IntMatrix cartan_matrix(const TypeList& ts);

// Matches C against the catalog componentwise, up to simultaneous row/column
// permutation. Components of more than 9 vertices are never matched.
// Returns nullopt if any component is not in the catalog. Throws if C is not
// a generalized Cartan matrix (diag 2, off-diag <= 0, zero pattern symmetric).
std::optional<TypeList> classify_cartan(const IntMatrix& c);

// Finite types only; throws otherwise.
int coxeter_number(const DynkinType& t);
std::uint64_t seed_count(const DynkinType& t);
std::uint64_t seed_count(const TypeList& ts);  // product over components

// Proper 2-coloring (+1/-1) of the underlying graph of a symmetrizable
// matrix (|entries| used as adjacency); the smallest vertex of each
// component is colored +1. nullopt when some component has an odd cycle.
std::optional<std::vector<int>> bipartite_coloring(const IntMatrix& c);

std::string to_string(const DynkinType& t);
std::string to_string(const TypeList& ts);  // "+"-joined, "0" when empty
std::optional<TypeList> parse_type(const std::string& s);

TypeList sorted(TypeList ts);

}  // namespace weaveclust
