#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sl3cb/analysis.hpp"

using namespace sl3cb;

namespace {

// All sums of indecomposables reaching each level, built up from scratch.
std::vector<std::set<GlobalPoint>> regenerate(const TrivalentGraph& g,
                                              const std::vector<GlobalPoint>& gens, int max_level) {
  std::vector<std::set<GlobalPoint>> by_level(max_level + 1);
  by_level[0] = {enumerate_global(g, std::nullopt, 0).front()};
  for (int level = 1; level <= max_level; ++level) {
    for (const auto& q : gens) {
      if (q.level > level) continue;
      for (const auto& p : by_level[level - q.level]) by_level[level].insert(add(p, q));
    }
  }
  return by_level;
}

}  // namespace

TEST_CASE("indecomposables in genus 0 sit at level one") {
  const auto r = indecomposables_up_to(caterpillar(4), 3);
  CHECK(r.max_level == 1);
  CHECK(r.search_bound == 3);
  CHECK(r.points.size() == 27);
  CHECK(r.points == enumerate_global(caterpillar(4), std::nullopt, 1));
}

TEST_CASE("indecomposables in genus 1") {
  const auto g = gamma_graph(1, 1);
  const auto r = indecomposables_up_to(g, 6);
  CHECK(r.max_level == 3);
  CHECK(r.points.size() == 8);
  CHECK(r.points == indecomposables_up_to_serial(g, 6).points);

  const auto sums = regenerate(g, r.points, 6);
  for (int level = 0; level <= 6; ++level) {
    const auto all = enumerate_global(g, std::nullopt, level);
    CHECK(std::set<GlobalPoint>(all.begin(), all.end()) == sums[level]);
  }
  CHECK(indecomposables_up_to(gamma_graph(1, 2), 5).max_level <= 3);
}

TEST_CASE("serial and parallel searches agree") {
  for (const auto& g : {caterpillar(3), caterpillar(5), gamma_graph(1, 2)}) {
    CHECK(indecomposables_up_to(g, 3).points == indecomposables_up_to_serial(g, 3).points);
  }
}

TEST_CASE("normality") {
  CHECK(check_normal(caterpillar(3), 4));
  CHECK(check_normal(caterpillar(5), 3));
  CHECK(check_normal(caterpillar(3), 0));
  // Genus one needs generators above level one.
  CHECK_FALSE(check_normal(gamma_graph(1, 1), 3));
}

TEST_CASE("relation connectivity") {
  CHECK(relation_connectivity(caterpillar(3), 3, 4));
  CHECK(relation_connectivity(caterpillar(4), 3, 3));
  CHECK_FALSE(relation_connectivity(caterpillar(3), 2, 4));

  // Level two has no move of degree one to make: every point factors one way.
  const auto two = relation_connectivity_report(caterpillar(3), 1, 2);
  CHECK(two.connected);
  CHECK(two.max_factorizations == 1);

  const auto three = relation_connectivity_report(caterpillar(3), 1, 3);
  CHECK_FALSE(three.connected);
  REQUIRE(three.witness.has_value());
  CHECK(three.witness->level == 3);
  CHECK(three.witness_factorizations >= 2);
}

TEST_CASE("omega") {
  for (const auto& g : {caterpillar(3), caterpillar(4), gamma_graph(1, 1), gamma_graph(1, 2),
                        dumbbell(), theta()}) {
    const auto w = gorenstein_omega(g);
    CHECK(w.level == 6);
    CHECK(is_valid(g, w));
    for (const Weight& lw : leaf_weights(g, w)) CHECK(lw == Weight{2, 2});
    for (const auto& part : w.parts) {
      for (const Weight& b : boundary(part)) CHECK(b == Weight{2, 2});
    }
  }
}

TEST_CASE("Gorenstein divisibility, genus 0") {
  const auto r = check_gorenstein_divisibility(caterpillar(3), 12);
  CHECK(r.passed);
  CHECK(r.failure.empty());
  CHECK(r.rank == 8);
  CHECK(r.facet_count == 12);
  CHECK(r.omega_interior);
  CHECK(r.omega_minimal);
  CHECK(r.interior_points > 0);
  REQUIRE(r.series.has_value());
  CHECK(r.series->h == std::vector<long>{1, 1, 1});
}

TEST_CASE("Gorenstein divisibility, genus 1") {
  const auto r = check_gorenstein_divisibility(gamma_graph(1, 1), 10);
  CHECK(r.passed);
  CHECK(r.rank == 6);
  CHECK(r.facet_count == 10);
  CHECK(r.omega_interior);
  CHECK(r.omega_minimal);
}

TEST_CASE("local Gorenstein check depends on the realization") {
  const auto cb = local_gorenstein_check(Rep::CB);
  CHECK(cb.facet_count == 12);
  CHECK(cb.omega_interior);
  REQUIRE(cb.interior_witness.has_value());
  CHECK(cb.interior_witness->level() == 6);

  const auto bz = local_gorenstein_check(Rep::BZ);
  CHECK(bz.facet_count == 12);
  CHECK_FALSE(bz.omega_interior);
  REQUIRE(bz.interior_witness.has_value());
  Exponents e{};
  for (Gen gen : {X, S, T, P21, P32, P13}) e[gen] = 1;
  CHECK(*bz.interior_witness == canonicalize(e, Rep::BZ));
}

TEST_CASE("h-vector") {
  const auto h = h_vector(caterpillar(3), 12);
  CHECK(h.h == std::vector<long>{1, 1, 1});
  CHECK(h.palindromic);
  CHECK(h.d == 8);
  CHECK(h.d - h.s == 6);
  CHECK(h.a_invariant == -6);
  CHECK(h.denominator == std::vector<int>(8, 1));
  CHECK(h.expected_rank == 8);

  const auto g = h_vector(gamma_graph(1, 1), 12);
  CHECK(g.palindromic);
  CHECK(g.d == 6);
  CHECK(g.expected_rank == 6);
  CHECK(g.h == std::vector<long>{1, 0, 0, 1});
  CHECK(g.denominator == std::vector<int>{1, 1, 1, 2, 2, 2});
  CHECK(g.a_invariant == -6);

  CHECK_THROWS_AS(h_vector(caterpillar(3), 4), std::invalid_argument);
}

TEST_CASE("h-vector numerator reproduces the Hilbert function") {
  for (const auto& g : {caterpillar(3), gamma_graph(1, 1)}) {
    const auto hv = h_vector(g, 12);
    // Expand h(t) / prod (1 - t^e) as a power series.
    std::vector<long> series(13, 0);
    for (std::size_t i = 0; i < hv.h.size(); ++i) series[i] = hv.h[i];
    for (int e : hv.denominator) {
      for (std::size_t k = e; k < series.size(); ++k) series[k] += series[k - e];
    }
    CHECK(series == hv.hilbert);
  }
}

TEST_CASE("ray points") {
  const LeafWeights adj(3, Weight{1, 1});
  const auto r = ray_points(caterpillar(3), adj, 3, 2);
  CHECK(r == std::vector<long>{1, 2, 3});
  const auto at2 = enumerate_global(caterpillar(3), LeafWeights(3, Weight{2, 2}), 6);
  CHECK(std::find(at2.begin(), at2.end(), gorenstein_omega(caterpillar(3))) != at2.end());
  CHECK(ray_points(caterpillar(4), LeafWeights(4, Weight{0, 0}), 1, 4) == std::vector<long>(5, 1));
}

TEST_CASE("lattice rank matches the expected rank") {
  for (const auto& g : {caterpillar(3), caterpillar(4), gamma_graph(1, 1), gamma_graph(1, 2)}) {
    const int expected = 8 * g.vertex_count() - 2 * g.edge_count() - (g.vertex_count() - 1);
    CHECK(lattice_rank(g, 3) == expected);
  }
}
