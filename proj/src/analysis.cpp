#include "sl3cb/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <omp.h>

namespace sl3cb {

namespace {

IndecomposableReport find_indecomposables(const TrivalentGraph& g, int max_level, std::size_t cap,
                                          bool parallel) {
  IndecomposableReport report;
  report.search_bound = max_level;
  for (int level = 1; level <= max_level; ++level) {
    const std::vector<GlobalPoint> points = enumerate_global(g, std::nullopt, level, cap);
    const std::vector<GlobalPoint>& lower = report.points;
    std::vector<char> keep(points.size(), 0);
    const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long i = 0; i < count; ++i) {
      keep[i] = std::none_of(lower.begin(), lower.end(),
                             [&](const GlobalPoint& q) { return subtract(points[i], q).has_value(); });
    }
    for (long i = 0; i < count; ++i) {
      if (keep[i]) {
        report.points.push_back(points[i]);
        report.max_level = level;
      }
    }
  }
  return report;
}

// Sorted multisets of level-one indices whose sum is p.
void factorizations(const GlobalPoint& p, const std::vector<GlobalPoint>& ones, std::size_t first,
                    std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (p.level == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = first; i < ones.size(); ++i) {
    auto rest = subtract(p, ones[i]);
    if (!rest) continue;
    current.push_back(static_cast<int>(i));
    factorizations(*rest, ones, i, current, out);
    current.pop_back();
  }
}

// Number of factors of a not matched in b (both sorted).
int multiset_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  int unmatched = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++unmatched;
      ++i;
    } else {
      ++j;
    }
  }
  return unmatched + static_cast<int>(a.size() - i);
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

// Multiplies the series by prod (1 - t^e), truncated to len(h) terms.
std::vector<long> times_denominator(const std::vector<long>& h, const std::vector<int>& degrees) {
  std::vector<long> c = h;
  for (int e : degrees) {
    for (std::size_t k = c.size(); k-- > static_cast<std::size_t>(e);) c[k] -= c[k - e];
  }
  return c;
}

// Multisets of size d drawn from `levels`, ordered by total degree and then
// by how many small degrees they use.
std::vector<std::vector<int>> denominator_candidates(int d, const std::vector<int>& levels) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(std::size_t, int)> build = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < levels.size(); ++i) {
      current.push_back(levels[i]);
      build(i, left - 1);
      current.pop_back();
    }
  };
  build(0, d);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int sa = std::accumulate(a.begin(), a.end(), 0);
    const int sb = std::accumulate(b.begin(), b.end(), 0);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

}  // namespace

IndecomposableReport indecomposables_up_to(const TrivalentGraph& g, int max_level, std::size_t cap) {
  return find_indecomposables(g, max_level, cap, true);
}

IndecomposableReport indecomposables_up_to_serial(const TrivalentGraph& g, int max_level,
                                                  std::size_t cap) {
  return find_indecomposables(g, max_level, cap, false);
}

bool check_normal(const TrivalentGraph& g, int max_level) {
  if (max_level <= 0) return true;
  const std::vector<GlobalPoint> ones = enumerate_global(g, std::nullopt, 1);
  std::vector<GlobalPoint> sums = enumerate_global(g, std::nullopt, 0);
  for (int level = 1; level <= max_level; ++level) {
    std::set<GlobalPoint> next;
    for (const auto& p : sums) {
      for (const auto& q : ones) next.insert(add(p, q));
    }
    sums.assign(next.begin(), next.end());
    if (sums != enumerate_global(g, std::nullopt, level)) return false;
  }
  return true;
}

ConnectivityReport relation_connectivity_report(const TrivalentGraph& g, int move_degree,
                                                int max_level) {
  ConnectivityReport report;
  const std::vector<GlobalPoint> ones = enumerate_global(g, std::nullopt, 1);
  for (int level = 2; level <= max_level; ++level) {
    for (const auto& p : enumerate_global(g, std::nullopt, level)) {
      ++report.points_checked;
      std::vector<std::vector<int>> facts;
      std::vector<int> current;
      factorizations(p, ones, 0, current, facts);
      const long n = static_cast<long>(facts.size());
      report.max_factorizations = std::max(report.max_factorizations, n);
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      int components = static_cast<int>(n);
      for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
          if (multiset_difference(facts[i], facts[j]) > move_degree) continue;
          const int a = find_root(parent, static_cast<int>(i));
          const int b = find_root(parent, static_cast<int>(j));
          if (a != b) {
            parent[a] = b;
            --components;
          }
        }
      }
      if (components != 1) {
        report.connected = false;
        report.witness = p;
        report.witness_factorizations = n;
        return report;
      }
    }
  }
  return report;
}

bool relation_connectivity(const TrivalentGraph& g, int move_degree, int max_level) {
  return relation_connectivity_report(g, move_degree, max_level).connected;
}

GlobalPoint gorenstein_omega(const TrivalentGraph& g) {
  Exponents e{};
  for (Gen gen : {X, S, T, P12, P23, P31}) e[gen] = 1;
  return assemble(g, std::vector<LocalPoint>(g.vertex_count(), canonicalize(e, Rep::CB)), 6);
}

GorensteinReport check_gorenstein_divisibility(const TrivalentGraph& g, int max_level,
                                               int generator_level) {
  GorensteinReport report;
  report.omega = gorenstein_omega(g);
  report.generator_level = generator_level;
  report.verified_up_to = max_level;

  std::vector<cone::Vec> gens;
  for (const auto& p : indecomposables_up_to(g, generator_level).points) gens.push_back(embed(p));
  const cone::Facets facets = cone::facets(gens, 24);
  report.rank = facets.dimension();
  report.facet_count = static_cast<int>(facets.normals.size());
  report.omega_interior = cone::interior(facets, embed(report.omega));
  report.omega_minimal = report.omega_interior;

  auto fail = [&](std::string why) {
    if (report.failure.empty()) report.failure = std::move(why);
  };
  if (!report.omega_interior) fail("omega lies on a facet");

  for (int level = 0; level <= max_level; ++level) {
    for (const auto& p : enumerate_global(g, std::nullopt, level)) {
      ++report.checked_points;
      const std::vector<long> values = cone::facet_values(facets, embed(p));
      if (std::any_of(values.begin(), values.end(), [](long v) { return v < 0; })) {
        fail("point " + to_string(p) + " lies outside the cone of the generators");
        continue;
      }
      const bool inside = std::all_of(values.begin(), values.end(), [](long v) { return v > 0; });
      if (inside) {
        ++report.interior_points;
        if (level <= 6 && p != report.omega) report.omega_minimal = false;
        if (!subtract(p, report.omega)) fail("interior point " + to_string(p) + " is not omega + S");
      }
      if (level + 6 <= max_level && !cone::interior(facets, embed(add(report.omega, p)))) {
        fail("omega + " + to_string(p) + " is not interior");
      }
    }
  }
  try {
    report.series = h_vector(g, max_level);
  } catch (const std::invalid_argument&) {
  }
  report.passed = report.failure.empty();
  return report;
}

LocalGorensteinCheck local_gorenstein_check(Rep rep, int max_level) {
  LocalGorensteinCheck check;
  check.rep = rep;
  std::vector<cone::Vec> gens;
  for (int gen = 0; gen < kGenCount; ++gen) {
    auto e = embed(generator_point(static_cast<Gen>(gen), rep));
    gens.emplace_back(e.begin(), e.end());
  }
  const cone::Facets facets = cone::facets(gens);
  check.facet_count = static_cast<int>(facets.normals.size());
  Exponents e{};
  for (Gen gen : {X, S, T, P12, P23, P31}) e[gen] = 1;
  check.omega = canonicalize(e, rep);
  auto as_vec = [](const LocalPoint& p) {
    auto a = embed(p);
    return cone::Vec(a.begin(), a.end());
  };
  check.omega_interior = cone::interior(facets, as_vec(check.omega));
  for (int level = 0; level <= max_level && !check.interior_witness; ++level) {
    for (const auto& p : enumerate_level(level, rep)) {
      if (cone::interior(facets, as_vec(p))) {
        check.interior_witness = p;
        break;
      }
    }
  }
  return check;
}

int lattice_rank(const TrivalentGraph& g, int max_level) {
  std::vector<cone::Vec> rows;
  for (int level = 1; level <= max_level; ++level) {
    for (const auto& p : enumerate_global(g, std::nullopt, level)) rows.push_back(embed(p));
  }
  return cone::rank(rows);
}

HVector h_vector(const TrivalentGraph& g, int max_level) {
  HVector out;
  out.d = lattice_rank(g, std::min(max_level, 3));
  out.expected_rank = 8 * g.vertex_count() - 2 * g.edge_count() - (g.vertex_count() - 1);
  if (max_level < out.d) {
    throw std::invalid_argument("h_vector: max level " + std::to_string(max_level) +
                                " is below the cone rank " + std::to_string(out.d));
  }
  std::set<int> level_set;
  for (const auto& p : indecomposables_up_to(g, std::min(max_level, 3)).points) level_set.insert(p.level);
  const std::vector<int> levels(level_set.begin(), level_set.end());
  out.hilbert = hilbert_function(g, max_level);

  constexpr int kZeroTail = 3;
  for (const auto& degrees : denominator_candidates(out.d, levels)) {
    const std::vector<long> c = times_denominator(out.hilbert, degrees);
    if (std::any_of(c.begin(), c.end(), [](long v) { return v < 0; })) continue;
    int last = -1;
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
      if (c[k] != 0) last = k;
    }
    if (last < 0 || max_level - last < kZeroTail) continue;
    out.denominator = degrees;
    out.s = last;
    out.a_invariant = last - std::accumulate(degrees.begin(), degrees.end(), 0);
    out.h.assign(c.begin(), c.begin() + last + 1);
    out.palindromic = std::equal(out.h.begin(), out.h.end(), out.h.rbegin());
    return out;
  }
  throw std::invalid_argument("h_vector: no denominator clears h(0.." + std::to_string(max_level) +
                              "); raise the max level");
}

std::vector<long> ray_points(const TrivalentGraph& g, const LeafWeights& leaves, int level,
                             int n_max) {
  std::vector<long> out;
  for (int n = 0; n <= n_max; ++n) {
    LeafWeights scaled;
    for (const Weight& w : leaves) scaled.push_back(n * w);
    out.push_back(global_dim(g, scaled, n * level));
  }
  return out;
}

}  // namespace sl3cb
