#pragma once

// Structural checks on the global semigroup of a graph: indecomposables,
// normality, relation degrees, and the Gorenstein property.

#include <optional>
#include <string>
#include <vector>

#include "sl3cb/cone.hpp"
#include "sl3cb/global.hpp"

namespace sl3cb {

struct IndecomposableReport {
  std::vector<GlobalPoint> points;
  int max_level = 0;
  int search_bound = 0;
};

/// Points of level <= D that are not p + q with p, q nonzero. A point is
/// decomposable iff it is divisible by a lower-level indecomposable.
/// Parallel over candidates; `_serial` is the single-threaded reference.
IndecomposableReport indecomposables_up_to(const TrivalentGraph& g, int max_level,
                                           std::size_t cap = kDefaultEnumerationCap);
IndecomposableReport indecomposables_up_to_serial(const TrivalentGraph& g, int max_level,
                                                  std::size_t cap = kDefaultEnumerationCap);

/// Every point of level L <= D is a sum of L level-one points, checked by
/// building the L-fold sumsets level by level.
bool check_normal(const TrivalentGraph& g, int max_level);

struct ConnectivityReport {
  bool connected = true;
  long points_checked = 0;
  long max_factorizations = 0;
  /// First point whose factorization graph is disconnected or empty.
  std::optional<GlobalPoint> witness;
  long witness_factorizations = 0;
};

/// For every point of level <= D, the graph on its factorizations into
/// level-one points, joined when they differ in at most `move_degree`
/// factors, is connected (and non-empty).
ConnectivityReport relation_connectivity_report(const TrivalentGraph& g, int move_degree,
                                                int max_level);
bool relation_connectivity(const TrivalentGraph& g, int move_degree, int max_level);

/// X S T P12 P23 P31 at every vertex: level 6, every slot (2,2).
GlobalPoint gorenstein_omega(const TrivalentGraph& g);

struct HVector {
  std::vector<long> hilbert;
  /// Numerator of the Hilbert series over prod (1 - t^e), e in `denominator`.
  std::vector<long> h;
  std::vector<int> denominator;
  int d = 0;
  /// 8V - 2E - (V - 1): the rank expected from the local cones.
  int expected_rank = 0;
  int s = 0;
  /// s - sum of the denominator degrees; d - s = -a when standard graded.
  int a_invariant = 0;
  bool palindromic = false;
};

struct GorensteinReport {
  GlobalPoint omega;
  int rank = 0;
  int facet_count = 0;
  int generator_level = 0;
  int verified_up_to = 0;
  bool omega_interior = false;
  /// omega is the only interior point of level <= 6.
  bool omega_minimal = false;
  long interior_points = 0;
  long checked_points = 0;
  bool passed = false;
  std::string failure;
  /// Hilbert series numerator when h(0..D) determines one.
  std::optional<HVector> series;
};

/// Facets from the indecomposables up to `generator_level`; then every
/// interior point of level <= D must be omega + (a point), and omega + every
/// point of level <= D - 6 must be interior.
GorensteinReport check_gorenstein_divisibility(const TrivalentGraph& g, int max_level,
                                               int generator_level = 3);

/// The same test on a single trinode in either realization of the local
/// semigroup: facets from the nine generators, omega in canonical form.
struct LocalGorensteinCheck {
  Rep rep = Rep::CB;
  LocalPoint omega;
  int facet_count = 0;
  bool omega_interior = false;
  /// Minimal-level interior point found by enumeration.
  std::optional<LocalPoint> interior_witness;
};
LocalGorensteinCheck local_gorenstein_check(Rep rep, int max_level = 6);

/// Multiplies h(0..D) by prod (1 - t^e) over d factors, d the rank of the
/// global cone. Factors are drawn from the levels of the indecomposables
/// (search bound 3). Candidates are tried by total degree, then
/// lexicographically; the first whose product has non-negative coefficients
/// vanishing on at least the last three levels is reported. Standard graded
/// semigroups get (1 - t)^d. Throws std::invalid_argument if D < d or no choice works.
HVector h_vector(const TrivalentGraph& g, int max_level);

/// global_dim(N lambda, N L) for N = 0..n_max.
std::vector<long> ray_points(const TrivalentGraph& g, const LeafWeights& leaves, int level,
                             int n_max);

/// Rank of the lattice spanned by the points of level 1..max_level.
int lattice_rank(const TrivalentGraph& g, int max_level);

}  // namespace sl3cb
