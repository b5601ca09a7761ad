#include "sl3cb/local.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace sl3cb {

namespace {

struct Relation {
  std::array<Gen, 3> preferred;
  std::array<Gen, 3> rewritten;
  std::array<Gen, 3> untouched;
};

constexpr Relation kCbRelation{{P12, P23, P31}, {P21, P32, P13}, {X, S, T}};
constexpr Relation kBzRelation{{X, S, T}, {P12, P23, P31}, {P21, P32, P13}};

constexpr const Relation& relation(Rep rep) { return rep == Rep::CB ? kCbRelation : kBzRelation; }

// (slot, component) pairs each generator contributes to; component 0 is the
// w1 coefficient, component 1 the w2 coefficient.
struct Contribution {
  int count = 0;
  std::array<std::pair<int, int>, 3> entries{};
};

constexpr std::array<Contribution, kGenCount> kContributions = {{
    {0, {}},                                  // X
    {3, {{{0, 0}, {1, 0}, {2, 0}}}},          // S
    {3, {{{0, 1}, {1, 1}, {2, 1}}}},          // T
    {2, {{{0, 0}, {1, 1}}}},                  // P12
    {2, {{{1, 0}, {2, 1}}}},                  // P23
    {2, {{{2, 0}, {0, 1}}}},                  // P31
    {2, {{{1, 0}, {0, 1}}}},                  // P21
    {2, {{{2, 0}, {1, 1}}}},                  // P32
    {2, {{{0, 0}, {2, 1}}}},                  // P13
}};

int component(const Boundary& abc, int slot, int comp) {
  return comp == 0 ? abc[slot].a : abc[slot].b;
}

bool is_canonical(const Exponents& e, Rep rep) {
  const auto& rel = relation(rep);
  return std::min({e[rel.rewritten[0]], e[rel.rewritten[1]], e[rel.rewritten[2]]}) == 0;
}

// Upper bound on each exponent inside the fiber over abc at the given level.
Exponents exponent_bounds(const Boundary& abc, int level) {
  Exponents bound{};
  for (int g = 0; g < kGenCount; ++g) {
    int b = level;
    const auto& c = kContributions[g];
    for (int i = 0; i < c.count; ++i) {
      b = std::min(b, component(abc, c.entries[i].first, c.entries[i].second));
    }
    bound[g] = b;
  }
  return bound;
}

// Depth-first search over exponents in generator order; emits matches in
// lexicographic order.
void search_fiber(const Boundary& abc, int level, Rep rep, const Exponents& bound, int position,
                  int remaining, Exponents& current, std::vector<LocalPoint>& out) {
  if (position == kGenCount - 1) {
    if (remaining > bound[position]) return;
    current[position] = remaining;
    if (is_canonical(current, rep) && boundary(current) == abc) {
      out.push_back(LocalPoint{current, rep});
    }
    current[position] = 0;
    return;
  }
  const int top = std::min(bound[position], remaining);
  for (int v = 0; v <= top; ++v) {
    current[position] = v;
    search_fiber(abc, level, rep, bound, position + 1, remaining - v, current, out);
  }
  current[position] = 0;
}

void compositions(int level, Rep rep, int position, int remaining, Exponents& current,
                  std::vector<LocalPoint>& out) {
  if (position == kGenCount - 1) {
    current[position] = remaining;
    if (is_canonical(current, rep)) out.push_back(LocalPoint{current, rep});
    current[position] = 0;
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    current[position] = v;
    compositions(level, rep, position + 1, remaining - v, current, out);
  }
  current[position] = 0;
}

}  // namespace

Boundary generator_boundary(Gen g) {
  Exponents e{};
  e[g] = 1;
  return boundary(e);
}

Gen path_generator(int from_slot, int to_slot) {
  static constexpr Gen table[3][3] = {{X, P12, P13}, {P21, X, P23}, {P31, P32, X}};
  if (from_slot < 0 || from_slot > 2 || to_slot < 0 || to_slot > 2 || from_slot == to_slot) {
    throw std::invalid_argument("path_generator: slots must be distinct and in 0..2");
  }
  return table[from_slot][to_slot];
}

int LocalPoint::level() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

LocalPoint canonicalize(const Exponents& raw, Rep rep) {
  Exponents e = raw;
  if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) {
    throw std::invalid_argument("canonicalize: negative exponent");
  }
  const auto& rel = relation(rep);
  const int m = std::min({e[rel.rewritten[0]], e[rel.rewritten[1]], e[rel.rewritten[2]]});
  for (int i = 0; i < 3; ++i) {
    e[rel.rewritten[i]] -= m;
    e[rel.preferred[i]] += m;
  }
  return LocalPoint{e, rep};
}

LocalPoint generator_point(Gen g, Rep rep) {
  Exponents e{};
  e[g] = 1;
  return LocalPoint{e, rep};
}

Boundary boundary(const Exponents& e) {
  std::array<std::array<int, 2>, 3> acc{};
  for (int g = 0; g < kGenCount; ++g) {
    const auto& c = kContributions[g];
    for (int i = 0; i < c.count; ++i) acc[c.entries[i].first][c.entries[i].second] += e[g];
  }
  return {Weight{acc[0][0], acc[0][1]}, Weight{acc[1][0], acc[1][1]},
          Weight{acc[2][0], acc[2][1]}};
}

Boundary boundary(const LocalPoint& p) { return boundary(p.exponents); }

int v_theta(const LocalPoint& p) {
  if (p.rep != Rep::CB) throw std::invalid_argument("v_theta: defined on the CB representation");
  return p.level() - p[X];
}

LocalPoint add(const LocalPoint& p, const LocalPoint& q) {
  if (p.rep != q.rep) throw std::invalid_argument("add: representation mismatch");
  Exponents e{};
  for (int g = 0; g < kGenCount; ++g) e[g] = p.exponents[g] + q.exponents[g];
  return canonicalize(e, p.rep);
}

LocalPoint operator+(const LocalPoint& p, const LocalPoint& q) { return add(p, q); }

std::optional<LocalPoint> subtract(const LocalPoint& p, const LocalPoint& q) {
  if (p.rep != q.rep) throw std::invalid_argument("subtract: representation mismatch");
  const auto& rel = relation(p.rep);
  Exponents d{};
  for (int g = 0; g < kGenCount; ++g) d[g] = p.exponents[g] - q.exponents[g];
  for (Gen g : rel.untouched) {
    if (d[g] < 0) return std::nullopt;
  }
  // Shift along (preferred - rewritten) by j: need preferred + j >= 0 and rewritten - j >= 0.
  const int lo = std::max({-d[rel.preferred[0]], -d[rel.preferred[1]], -d[rel.preferred[2]]});
  const int hi = std::min({d[rel.rewritten[0]], d[rel.rewritten[1]], d[rel.rewritten[2]]});
  if (lo > hi) return std::nullopt;
  for (int i = 0; i < 3; ++i) {
    d[rel.preferred[i]] += hi;
    d[rel.rewritten[i]] -= hi;
  }
  return LocalPoint{d, p.rep};
}

std::array<long, 8> embed(const LocalPoint& p) {
  const auto& rel = relation(p.rep);
  const auto& e = p.exponents;
  return {e[rel.untouched[0]],
          e[rel.untouched[1]],
          e[rel.untouched[2]],
          e[rel.preferred[0]] + e[rel.rewritten[0]],
          e[rel.preferred[1]] + e[rel.rewritten[1]],
          e[rel.preferred[2]] + e[rel.rewritten[2]],
          e[rel.preferred[0]] - e[rel.preferred[1]],
          e[rel.preferred[1]] - e[rel.preferred[2]]};
}

std::vector<LocalPoint> enumerate_fiber_serial(const Boundary& abc, int level, Rep rep) {
  std::vector<LocalPoint> out;
  if (level < 0) return out;
  const Exponents bound = exponent_bounds(abc, level);
  Exponents current{};
  search_fiber(abc, level, rep, bound, 0, level, current, out);
  return out;
}

std::vector<LocalPoint> enumerate_fiber(const Boundary& abc, int level, Rep rep) {
  std::vector<LocalPoint> out;
  if (level < 0) return out;
  const Exponents bound = exponent_bounds(abc, level);
  const int s_top = bound[S];

#pragma omp parallel
  {
    std::vector<LocalPoint> local;
#pragma omp for schedule(dynamic) nowait
    for (int s = 0; s <= s_top; ++s) {
      for (int x = 0; x <= std::min(bound[X], level - s); ++x) {
        Exponents current{};
        current[X] = x;
        current[S] = s;
        search_fiber(abc, level, rep, bound, 2, level - x - s, current, local);
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LocalPoint> enumerate_level(int level, Rep rep) {
  std::vector<LocalPoint> out;
  if (level < 0) return out;
  Exponents current{};
  compositions(level, rep, 0, level, current, out);
  return out;
}

Exponents QminFactorization::exponents() const {
  Exponents e{};
  e[S] = s_min;
  e[T] = t_min;
  for (int i = 0; i < 6; ++i) e[P12 + i] = p_min[i];
  return e;
}

std::optional<QminFactorization> q_min(const Boundary& abc) {
  const auto [a1, a2] = std::pair{abc[0].a, abc[0].b};
  const auto [b1, b2] = std::pair{abc[1].a, abc[1].b};
  const auto [c1, c2] = std::pair{abc[2].a, abc[2].b};
  const int first_total = a1 + b1 + c1;
  const int second_total = a2 + b2 + c2;
  if ((second_total - first_total) % 3 != 0) return std::nullopt;

  // t - s is fixed by the totals; the anticyclic triple is fixed up to a
  // common shift, which is taken minimal (a zero corner).
  const int delta = (second_total - first_total) / 3;
  const int e1 = delta - a2 + c1;  // p32 - p21
  const int e2 = delta - b2 + a1;  // p13 - p32
  const int shift = std::max({0, -e1, -e1 - e2});
  const int p21 = shift;
  const int p32 = shift + e1;
  const int p13 = shift + e1 + e2;

  // Largest s keeps the cyclic triple minimal (S T preferred).
  const int s = std::min({a1 - p13, b1 - p21, c1 - p32});
  const int t = s + delta;
  if (s < 0 || t < 0) return std::nullopt;

  QminFactorization f;
  f.s_min = s;
  f.t_min = t;
  f.p_min = {a1 - s - p13, b1 - s - p21, c1 - s - p32, p21, p32, p13};
  if (boundary(f.exponents()) != abc) return std::nullopt;
  f.v_min = s + t + std::accumulate(f.p_min.begin(), f.p_min.end(), 0);
  f.k = std::min(s, t);
  return f;
}

long classical_count(const Boundary& abc) {
  auto f = q_min(abc);
  return f ? f->k + 1 : 0;
}

long fused_count(const Boundary& abc, int level) {
  auto f = q_min(abc);
  if (!f) return 0;
  return std::clamp<long>(level - f->v_min + 1, 0, f->k + 1);
}

std::vector<LocalPoint> block_basis(const Boundary& abc, int level) {
  std::vector<LocalPoint> out;
  auto f = q_min(abc);
  if (!f) return out;
  for (int l = 0; l <= f->k && f->v_min + l <= level; ++l) {
    Exponents e = f->exponents();
    e[S] -= l;
    e[T] -= l;
    e[P12] += l;
    e[P23] += l;
    e[P31] += l;
    e[X] = level - (f->v_min + l);
    out.push_back(LocalPoint{e, Rep::CB});
  }
  return out;
}

bool hexagon_conditions_hold(const Triangle& t) {
  const auto& h = t.hexagon;
  return h[0] + h[1] == h[3] + h[4] && h[2] + h[3] == h[5] + h[0] && h[4] + h[5] == h[1] + h[2];
}

Boundary boundary(const Triangle& t) {
  const auto& k = t.corners;
  const auto& h = t.hexagon;
  return {Weight{k[0] + h[0], h[1] + k[1]}, Weight{k[1] + h[2], h[3] + k[2]},
          Weight{k[2] + h[4], h[5] + k[0]}};
}

Triangle to_triangle(const LocalPoint& p) {
  if (p.rep != Rep::BZ) throw std::invalid_argument("to_triangle: expects a BZ point");
  Triangle t;
  t.corners = {p[P13], p[P21], p[P32]};
  t.hexagon = {p[S] + p[P12], p[T] + p[P31], p[S] + p[P23],
               p[T] + p[P12], p[S] + p[P31], p[T] + p[P23]};
  return t;
}

LocalPoint from_triangle(const Triangle& tri, int level) {
  if (!hexagon_conditions_hold(tri)) {
    throw std::invalid_argument("from_triangle: hexagon conditions violated");
  }
  if (std::any_of(tri.corners.begin(), tri.corners.end(), [](int v) { return v < 0; }) ||
      std::any_of(tri.hexagon.begin(), tri.hexagon.end(), [](int v) { return v < 0; })) {
    throw std::invalid_argument("from_triangle: negative entry");
  }
  const auto& h = tri.hexagon;
  Exponents e{};
  e[P13] = tri.corners[0];
  e[P21] = tri.corners[1];
  e[P32] = tri.corners[2];
  e[S] = std::min({h[0], h[2], h[4]});
  e[T] = std::min({h[1], h[3], h[5]});
  e[P12] = h[0] - e[S];
  e[P23] = h[2] - e[S];
  e[P31] = h[4] - e[S];
  const int used = std::accumulate(e.begin(), e.end(), 0);
  if (level < used) {
    throw std::invalid_argument("from_triangle: level " + std::to_string(level) +
                                " below triangle degree " + std::to_string(used));
  }
  e[X] = level - used;
  return LocalPoint{e, Rep::BZ};
}

LocalPoint from_triangle(const Triangle& tri) {
  return from_triangle(tri, std::accumulate(tri.corners.begin(), tri.corners.end(), 0) +
                                std::accumulate(tri.hexagon.begin(), tri.hexagon.end(), 0));
}

std::vector<Triangle> enumerate_triangles(const Boundary& abc) {
  const auto [a1, a2] = std::pair{abc[0].a, abc[0].b};
  const auto [b1, b2] = std::pair{abc[1].a, abc[1].b};
  const auto [c1, c2] = std::pair{abc[2].a, abc[2].b};
  std::vector<Triangle> out;
  for (int k1 = 0; k1 <= std::min(a1, c2); ++k1) {
    for (int k2 = 0; k2 <= std::min(a2, b1); ++k2) {
      for (int k3 = 0; k3 <= std::min(b2, c1); ++k3) {
        Triangle t{{k1, k2, k3}, {a1 - k1, a2 - k2, b1 - k2, b2 - k3, c1 - k3, c2 - k1}};
        if (hexagon_conditions_hold(t)) out.push_back(t);
      }
    }
  }
  return out;
}

std::pair<Triangle, Triangle> markov_element() {
  return {Triangle{{1, 1, 1}, {0, 0, 0, 0, 0, 0}}, Triangle{{0, 0, 0}, {1, 1, 1, 1, 1, 1}}};
}

std::string to_string(const LocalPoint& p) {
  std::string out;
  for (int g = 0; g < kGenCount; ++g) {
    if (p.exponents[g] == 0) continue;
    if (!out.empty()) out += ' ';
    out += kGenNames[g];
    if (p.exponents[g] > 1) out += '^' + std::to_string(p.exponents[g]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace sl3cb
