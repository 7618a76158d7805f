#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weaveclust/dynkin.hpp"

namespace weaveclust {

// Positive braid word on `strands` strands; letters are Artin generator
// indices in 1..strands-1.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Throws std::invalid_argument on out-of-range letters or strands < 2.
void validate(const BraidWord& w);

std::string to_string(const BraidWord& w);

// Underlying permutation: image[i] = endpoint of the strand starting at
// slot i (0-based), reading the word left to right.
std::vector<int> strand_permutation(const BraidWord& w);

// Two-strand words whose closures realize the linear family:
// sigma_1^{n+1} (disk form) and sigma_1^{n+3} (annular form).
BraidWord beta0_linear(int n);
BraidWord beta_linear(int n);

// Three-strand tripod words: sigma_1 sigma_2^a sigma_1^{b-1} sigma_2^c and
// sigma_2 sigma_1^{a+1} sigma_2 sigma_1^{b+1} sigma_2 sigma_1^{c+1}.
BraidWord beta0_tripod(int a, int b, int c);
BraidWord beta_tripod(int a, int b, int c);

// Four-strand affine-D words (n >= 4):
// sigma_3 sigma_2^2 sigma_3 sigma_2^{n-4} sigma_1 sigma_2^2 sigma_1 and the
// doubled annular form with sigma_1^k, sigma_1^l tails, k+l = n-4.
BraidWord beta0_affine_d(int n);
BraidWord beta_affine_d(int n);

// Closure-preserving stabilization: an N-strand word w becomes the
// (N+1)-strand word w . (sigma_N .. sigma_2 sigma_1^3 sigma_2 .. sigma_N).
BraidWord stabilize(const BraidWord& w);

// One rewriting step on a positive word. Positions are 0-based indices into
// the letter list; Rotate moves the first letter to the end.
struct BraidStep {
  enum Kind { FarCommute, BraidMove, Rotate } kind = Rotate;
  int pos = 0;

  friend bool operator==(const BraidStep&, const BraidStep&) = default;
};

BraidWord apply_step(const BraidWord& w, const BraidStep& s);

struct BraidEquivalence {
  enum Verdict { Yes, No, Unknown } verdict = Unknown;
  // Steps transforming the first word into the second; empty unless Yes.
  std::vector<BraidStep> trace;
  std::uint64_t explored = 0;
};

// BFS over far commutations, braid moves and cyclic rotation. Returns No
// only when the whole equivalence class was enumerated within budget;
// Unknown when the budget ran out first. A Yes trace is replayed before
// being returned. Budget 0 reads WEAVECLUST_BUDGET (default 1000000).
BraidEquivalence braid_equivalent(const BraidWord& a, const BraidWord& b,
                                  std::uint64_t budget = 0);

// Brick of a word: the gap between consecutive occurrences of one letter.
struct Brick {
  int level = 0;  // generator index
  int left = 0, right = 0;  // positions of the flanking crossings

  friend bool operator==(const Brick&, const Brick&) = default;
};

// Bricks ordered by (level, left).
std::vector<Brick> bricks(const BraidWord& w);

// Skew-symmetric adjacency of the brick quiver, rows/cols ordered as in
// bricks(). Arrows: consecutive bricks on one level point right; bricks on
// adjacent levels overlapping in a staggered way (neither contains the
// other) are joined, pointing from the lower level when the upper brick
// sticks out to the left and from the upper level otherwise.
IntMatrix brick_quiver(const BraidWord& w);

std::optional<TypeList> brick_type(const BraidWord& w,
                                   std::size_t node_budget = 100000);

}  // namespace weaveclust
