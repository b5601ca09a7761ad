#pragma once

// The trinode semigroups. A LocalPoint is a monomial in the nine generators
// X, S, T, P12, P23, P31, P21, P32, P13 taken modulo one cubic binomial:
//
//   CB:  P12 P23 P31 = P21 P32 P13   (canonical: min(p21, p32, p13) = 0)
//   BZ:  X S T       = P12 P23 P31   (canonical: min(p12, p23, p31) = 0)
//
// The level of a point is its total degree. The boundary map reads off the
// weight carried by each of the three slots.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sl3cb/weights.hpp"

namespace sl3cb {

enum class Rep { CB, BZ };

enum Gen : int { X = 0, S, T, P12, P23, P31, P21, P32, P13 };

inline constexpr int kGenCount = 9;
inline constexpr std::array<const char*, kGenCount> kGenNames = {
    "X", "S", "T", "P12", "P23", "P31", "P21", "P32", "P13"};

using Exponents = std::array<int, kGenCount>;
using Boundary = std::array<Weight, 3>;

/// Boundary of a single generator.
Boundary generator_boundary(Gen g);

/// P_ij with slot i carrying (1,0) and slot j carrying (0,1); slots are 0-based.
Gen path_generator(int from_slot, int to_slot);

struct LocalPoint {
  Exponents exponents{};
  Rep rep = Rep::CB;

  int level() const;
  int operator[](Gen g) const { return exponents[g]; }

  auto operator<=>(const LocalPoint&) const = default;
};

/// Rewrites toward the representation's canonical side; level-preserving and idempotent.
LocalPoint canonicalize(const Exponents& raw, Rep rep);

/// Single generator, optionally multiplied by a power of X.
LocalPoint generator_point(Gen g, Rep rep = Rep::CB);

Boundary boundary(const LocalPoint& p);
Boundary boundary(const Exponents& e);

/// Sum of the non-X exponents. Well defined on CB classes because both sides
/// of the CB relation have three non-X factors.
int v_theta(const LocalPoint& p);

/// Semigroup addition. Throws std::invalid_argument on representation mismatch.
LocalPoint add(const LocalPoint& p, const LocalPoint& q);
LocalPoint operator+(const LocalPoint& p, const LocalPoint& q);

/// p - q inside the semigroup, if it exists.
std::optional<LocalPoint> subtract(const LocalPoint& p, const LocalPoint& q);

/// Integer coordinates of the class in a rank-8 lattice: the exponent vector
/// modulo the representation's relation direction. Injective on classes.
std::array<long, 8> embed(const LocalPoint& p);

/// All canonical points with the given boundary and level, in lexicographic
/// order of exponent vectors. Bounded exhaustive search (parallel over the S
/// exponent); `enumerate_fiber_serial` is the single-threaded reference.
std::vector<LocalPoint> enumerate_fiber(const Boundary& abc, int level, Rep rep = Rep::CB);
std::vector<LocalPoint> enumerate_fiber_serial(const Boundary& abc, int level, Rep rep = Rep::CB);

/// All canonical points of a given level, lexicographic.
std::vector<LocalPoint> enumerate_level(int level, Rep rep = Rep::CB);

/// The base point of a classical fiber: zero corner, S T preferred over the
/// cyclic P-triple.
struct QminFactorization {
  int s_min = 0;
  int t_min = 0;
  /// p12, p23, p31, p21, p32, p13
  std::array<int, 6> p_min{};
  int v_min = 0;
  int k = 0;

  Exponents exponents() const;
};

std::optional<QminFactorization> q_min(const Boundary& abc);

/// Number of classical invariants: k + 1, or 0 if the fiber is empty.
long classical_count(const Boundary& abc);

/// Number of level-L points over abc: clamp(L - v_min + 1, 0, k + 1).
long fused_count(const Boundary& abc, int level);

/// The monomials M_l = (ST)^{-l} (P12 P23 P31)^l M_min with v_theta <= L,
/// padded with X to level L.
std::vector<LocalPoint> block_basis(const Boundary& abc, int level);

/// Berenstein-Zelevinsky triangle. Sides read (corner, hex, hex, corner):
/// side1 = (k1, h1, h2, k2), side2 = (k2, h3, h4, k3), side3 = (k3, h5, h6, k1).
struct Triangle {
  std::array<int, 3> corners{};
  std::array<int, 6> hexagon{};

  auto operator<=>(const Triangle&) const = default;
};

bool hexagon_conditions_hold(const Triangle& t);
Boundary boundary(const Triangle& t);

/// Linear extension of the generator table; X maps to the zero triangle.
Triangle to_triangle(const LocalPoint& p);

/// Inverse of to_triangle on BZ-canonical points; X pads up to `level`.
/// Throws std::invalid_argument if the hexagon conditions fail or the level is
/// too small.
LocalPoint from_triangle(const Triangle& t, int level);
LocalPoint from_triangle(const Triangle& t);

/// All triangles with the given boundary, by direct search over corners.
std::vector<Triangle> enumerate_triangles(const Boundary& abc);

/// Kernel generator of the boundary map on triangles: (corners all 1, hexagon all 1).
std::pair<Triangle, Triangle> markov_element();

std::string to_string(const LocalPoint& p);

}  // namespace sl3cb
