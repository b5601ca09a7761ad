#pragma once

// Lattice points of the fiber product over a trivalent graph: one CB local
// point per vertex, all of the same level, with dual boundary values across
// every internal edge. Leaf i carries its weight unstarred.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sl3cb/graphs.hpp"
#include "sl3cb/local.hpp"
#include "sl3cb/weights.hpp"

namespace sl3cb {

using LeafWeights = std::vector<Weight>;

struct GlobalPoint {
  std::vector<LocalPoint> parts;
  int level = 0;

  auto operator<=>(const GlobalPoint&) const = default;
};

/// Validates a vertexwise assignment. Throws std::invalid_argument on a level
/// mismatch or a duality violation (naming the edge).
GlobalPoint assemble(const TrivalentGraph& g, std::vector<LocalPoint> parts, int level);
bool is_valid(const TrivalentGraph& g, const GlobalPoint& p);

LeafWeights leaf_weights(const TrivalentGraph& g, const GlobalPoint& p);

GlobalPoint add(const GlobalPoint& p, const GlobalPoint& q);
/// p - q in the fiber product; exists iff every vertexwise difference exists.
std::optional<GlobalPoint> subtract(const GlobalPoint& p, const GlobalPoint& q);

/// Concatenated local lattice coordinates (8 per vertex).
std::vector<long> embed(const GlobalPoint& p);

std::string to_string(const GlobalPoint& p);

/// Count attached to one vertex from its three slot weights and the level.
using LocalCount = std::function<long(const Boundary&, int)>;

long fused_local(const Boundary& abc, int level);
long fusion_local(const Boundary& abc, int level);

/// Sum over edge weights (and over leaf weights when `leaves` is empty) of
/// the product of local counts. Weights range over a+b <= level.
///  sum_product:        OpenMP odometer over all weight tuples
///  sum_product_serial: the same odometer on one thread
///  sum_product_tree:   message passing; genus 0 only
/// All throw std::invalid_argument on leaf arity mismatch.
long sum_product(const TrivalentGraph& g, const std::optional<LeafWeights>& leaves, int level,
                 const LocalCount& count = fused_local);
long sum_product_serial(const TrivalentGraph& g, const std::optional<LeafWeights>& leaves,
                        int level, const LocalCount& count = fused_local);
long sum_product_tree(const TrivalentGraph& g, const std::optional<LeafWeights>& leaves, int level,
                      const LocalCount& count = fused_local);

/// Number of lattice points over the given leaf weights at level L.
long global_dim(const TrivalentGraph& g, const LeafWeights& leaves, int level);
/// The same sum with Kac-Walton fusion coefficients at each vertex.
long oracle_dim(const TrivalentGraph& g, const LeafWeights& leaves, int level);

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

/// Explicit points, sorted. With no leaf weights, every point of the level.
/// Throws std::length_error when more than `cap` points would be produced.
std::vector<GlobalPoint> enumerate_global(const TrivalentGraph& g,
                                          const std::optional<LeafWeights>& leaves, int level,
                                          std::size_t cap = kDefaultEnumerationCap);

/// h(L) for L = 0..max_level, summed over all leaf weights.
std::vector<long> hilbert_function(const TrivalentGraph& g, int max_level);

/// Nonzero dimensions for all leaf tuples with a+b <= max_weight_level.
using MultigradedTable = std::map<LeafWeights, long>;
MultigradedTable multigraded_table(const TrivalentGraph& g, int level, int max_weight_level);

/// Level-one points of a tree built from proper forests: the all-X point and,
/// per forest, both orientations of every component.
std::vector<GlobalPoint> degree_one_elements(const TrivalentGraph& tree);

}  // namespace sl3cb
