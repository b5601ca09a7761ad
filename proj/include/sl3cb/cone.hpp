#pragma once

// Exact integer linear algebra for rational polyhedral cones given by
// generators: rank, a coordinate projection that is injective on the span,
// and the facet normals (double description on the dual cone).

#include <cstddef>
#include <vector>

namespace sl3cb::cone {

using Vec = std::vector<long>;

/// Rank over the rationals (fraction-free elimination; throws
/// std::overflow_error if an intermediate leaves 128 bits).
int rank(const std::vector<Vec>& rows);

/// Pivot columns of the row-reduced matrix. Projecting onto them is
/// injective on the row span.
std::vector<int> pivot_columns(const std::vector<Vec>& rows);

struct Facets {
  /// Coordinates kept by the projection.
  std::vector<int> coordinates;
  /// Primitive inner normals in projected coordinates, sorted.
  std::vector<Vec> normals;

  int dimension() const { return static_cast<int>(coordinates.size()); }
};

/// Facets of the cone spanned by the generators. Throws
/// std::invalid_argument when the rank exceeds `max_rank`.
Facets facets(const std::vector<Vec>& generators, int max_rank = 16);

/// Values of every facet functional at a point given in full coordinates.
std::vector<long> facet_values(const Facets& f, const Vec& point);

bool in_cone(const Facets& f, const Vec& point);
/// Strictly positive on every facet.
bool interior(const Facets& f, const Vec& point);

}  // namespace sl3cb::cone
