#pragma once

// Dominant sl3 weights and the representation-theoretic oracles used to
// check every polytope count: weight multiplicities, classical tensor
// product decompositions and level-L fusion coefficients.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sl3cb {

/// A dominant weight a*w1 + b*w2 (a, b >= 0).
struct Weight {
  int a = 0;
  int b = 0;

  constexpr Weight() = default;
  constexpr Weight(int a_, int b_) : a(a_), b(b_) {}

  auto operator<=>(const Weight&) const = default;
};

constexpr Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
constexpr Weight operator*(int n, Weight x) { return {n * x.a, n * x.b}; }

constexpr Weight dual(Weight w) { return {w.b, w.a}; }

/// Pairing with the highest root; a weight is integrable at level L iff this is <= L.
constexpr int theta_level(Weight w) { return w.a + w.b; }

long weyl_dim(Weight w);

/// Parses "a,b" (decimal, no spaces). Throws std::invalid_argument.
Weight parse_weight(std::string_view text);
std::string to_string(Weight w);

/// All dominant weights with a + b <= level, ordered lexicographically.
std::vector<Weight> admissible_weights(int level);

/// An element of the weight lattice in fundamental-weight coordinates; may be
/// non-dominant.
struct LatticeWeight {
  int p = 0;
  int q = 0;
  auto operator<=>(const LatticeWeight&) const = default;
};

/// Weight multiplicities of V(w) by Freudenthal's recursion (exact integers).
std::map<LatticeWeight, long> weight_multiplicities(Weight w);

using MultiplicityMap = std::map<Weight, long>;

/// V(x) (x) V(y) by Brauer-Klimyk alternation over the weights of V(x).
MultiplicityMap tensor_decompose(Weight x, Weight y);

/// dim (V(x) (x) V(y) (x) V(z))^{sl3}.
long triple_invariant_dim(Weight x, Weight y, Weight z);

/// Level-L fusion coefficient dim V_{0,3}(x, y, z, L) by Kac-Walton folding.
/// Zero unless every argument is integrable at level L.
long fusion_dim(Weight x, Weight y, Weight z, int level);

}  // namespace sl3cb
