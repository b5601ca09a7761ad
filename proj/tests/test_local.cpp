#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sl3cb/local.hpp"

using namespace sl3cb;

namespace {

Exponents exps(std::initializer_list<std::pair<Gen, int>> terms) {
  Exponents e{};
  for (auto [g, n] : terms) e[g] += n;
  return e;
}

// Boundary written out from the generator dictionary: S = w1 everywhere,
// T = w2 everywhere, P_ij = w1 at slot i plus w2 at slot j.
Boundary naive_boundary(const Exponents& e) {
  Boundary out{};
  for (auto& w : out) w = {e[S], e[T]};
  const Gen path[3][3] = {{X, P12, P13}, {P21, X, P23}, {P31, P32, X}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      out[i].a += e[path[i][j]];
      out[j].b += e[path[i][j]];
    }
  }
  return out;
}

bool naive_canonical(const Exponents& e, Rep rep) {
  return rep == Rep::CB ? std::min({e[P21], e[P32], e[P13]}) == 0
                        : std::min({e[P12], e[P23], e[P31]}) == 0;
}

// Every exponent vector of total degree `level`, filtered by boundary and canonical form.
std::vector<LocalPoint> brute_fiber(const Boundary& abc, int level, Rep rep) {
  std::vector<LocalPoint> out;
  Exponents e{};
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == kGenCount - 1) {
      e[pos] = left;
      if (naive_canonical(e, rep) && naive_boundary(e) == abc) out.push_back({e, rep});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
    e[pos] = 0;
  };
  rec(rec, 0, level);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Boundary> boundaries(int max_theta) {
  std::vector<Boundary> out;
  const auto ws = admissible_weights(max_theta);
  for (const Weight& x : ws) {
    for (const Weight& y : ws) {
      for (const Weight& z : ws) out.push_back({x, y, z});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("generator boundaries follow the dictionary") {
  for (int g = 0; g < kGenCount; ++g) {
    Exponents e{};
    e[g] = 1;
    CHECK(generator_boundary(static_cast<Gen>(g)) == naive_boundary(e));
    CHECK(boundary(e) == naive_boundary(e));
  }
  CHECK(boundary(exps({{S, 1}})) == Boundary{Weight{1, 0}, Weight{1, 0}, Weight{1, 0}});
  CHECK(boundary(exps({{P12, 1}})) == Boundary{Weight{1, 0}, Weight{0, 1}, Weight{0, 0}});
  CHECK(path_generator(0, 1) == P12);
  CHECK(path_generator(2, 0) == P31);
}

TEST_CASE("canonicalize") {
  const auto cb = canonicalize(exps({{P21, 1}, {P32, 1}, {P13, 1}}), Rep::CB);
  CHECK(cb.exponents == exps({{P12, 1}, {P23, 1}, {P31, 1}}));
  const auto bz = canonicalize(exps({{P12, 1}, {P23, 1}, {P31, 1}}), Rep::BZ);
  CHECK(bz.exponents == exps({{X, 1}, {S, 1}, {T, 1}}));
  for (Rep rep : {Rep::CB, Rep::BZ}) {
    for (int level = 0; level <= 3; ++level) {
      for (const auto& p : enumerate_level(level, rep)) {
        CHECK(canonicalize(p.exponents, rep) == p);
        CHECK(p.level() == level);
      }
    }
  }
}

TEST_CASE("v_theta is constant on relation classes") {
  const Exponents a = exps({{P12, 2}, {P23, 1}, {P31, 1}, {S, 1}});
  const Exponents b = exps({{P12, 1}, {P21, 1}, {P32, 1}, {P13, 1}, {S, 1}});
  CHECK(canonicalize(a, Rep::CB) == canonicalize(b, Rep::CB));
  CHECK(v_theta(canonicalize(a, Rep::CB)) == 5);
  CHECK(v_theta(generator_point(X)) == 0);
}

TEST_CASE("add and subtract") {
  const auto p = generator_point(P12) + generator_point(P23) + generator_point(P31);
  const auto q = generator_point(P21) + generator_point(P32);
  const auto sum = p + q + generator_point(P13);
  CHECK(subtract(sum, generator_point(P13)) == p + q);
  CHECK(subtract(generator_point(S), generator_point(T)) == std::nullopt);
  CHECK_THROWS_AS(add(generator_point(S, Rep::CB), generator_point(S, Rep::BZ)),
                  std::invalid_argument);
  for (Rep rep : {Rep::CB, Rep::BZ}) {
    const auto ones = enumerate_level(1, rep);
    const auto twos = enumerate_level(2, rep);
    for (const auto& x : twos) {
      for (const auto& y : ones) {
        const auto s = x + y;
        CHECK(subtract(s, y) == x);
        CHECK(subtract(s, x) == y);
        CHECK(boundary(s)[0] == boundary(x)[0] + boundary(y)[0]);
      }
    }
  }
}

TEST_CASE("embed is injective and additive") {
  for (Rep rep : {Rep::CB, Rep::BZ}) {
    std::set<std::array<long, 8>> seen;
    std::size_t total = 0;
    for (int level = 0; level <= 4; ++level) {
      for (const auto& p : enumerate_level(level, rep)) {
        seen.insert(embed(p));
        ++total;
      }
    }
    CHECK(seen.size() == total);
    const auto ones = enumerate_level(1, rep);
    for (const auto& x : ones) {
      for (const auto& y : ones) {
        const auto ex = embed(x), ey = embed(y), es = embed(x + y);
        for (int i = 0; i < 8; ++i) CHECK(es[i] == ex[i] + ey[i]);
      }
    }
  }
}

TEST_CASE("fibers: search, serial search and brute force agree") {
  for (Rep rep : {Rep::CB, Rep::BZ}) {
    for (const auto& abc : boundaries(2)) {
      for (int level = 0; level <= 3; ++level) {
        const auto fast = enumerate_fiber(abc, level, rep);
        CHECK(fast == enumerate_fiber_serial(abc, level, rep));
        CHECK(fast == brute_fiber(abc, level, rep));
      }
    }
  }
}

TEST_CASE("fiber sizes are fusion coefficients") {
  for (const auto& abc : boundaries(3)) {
    const long classical = triple_invariant_dim(abc[0], abc[1], abc[2]);
    CHECK(classical_count(abc) == classical);
    CHECK(static_cast<long>(enumerate_triangles(abc).size()) == classical);
    for (int level = 0; level <= 5; ++level) {
      const long fused = fusion_dim(abc[0], abc[1], abc[2], level);
      CHECK(fused_count(abc, level) == fused);
      CHECK(static_cast<long>(enumerate_fiber(abc, level).size()) == fused);
    }
  }
}

TEST_CASE("q_min") {
  const Boundary adjoint{Weight{1, 1}, Weight{1, 1}, Weight{1, 1}};
  const auto f = q_min(adjoint);
  REQUIRE(f.has_value());
  CHECK(f->s_min == 1);
  CHECK(f->t_min == 1);
  CHECK(f->p_min == std::array<int, 6>{0, 0, 0, 0, 0, 0});
  CHECK(f->v_min == 2);
  CHECK(f->k == 1);
  CHECK(fused_count(adjoint, 2) == 1);
  CHECK(fused_count(adjoint, 3) == 2);
  CHECK(fused_count(adjoint, 1) == 0);

  CHECK_FALSE(q_min({Weight{1, 0}, Weight{0, 0}, Weight{0, 0}}).has_value());
  CHECK_FALSE(q_min({Weight{1, 0}, Weight{1, 0}, Weight{0, 0}}).has_value());
  const auto vac = q_min({Weight{0, 0}, Weight{0, 0}, Weight{0, 0}});
  REQUIRE(vac.has_value());
  CHECK(vac->v_min == 0);

  for (const auto& abc : boundaries(3)) {
    const auto g = q_min(abc);
    if (!g) continue;
    CHECK(boundary(g->exponents()) == abc);
    CHECK(std::min({g->p_min[3], g->p_min[4], g->p_min[5]}) == 0);
    CHECK(std::min({g->p_min[0], g->p_min[1], g->p_min[2]}) == 0);
    // A fiber is a single point exactly when the base triangle touches zero
    // somewhere on its hexagon.
    const Triangle t = to_triangle(LocalPoint{g->exponents(), Rep::BZ});
    const bool hex_zero = std::any_of(t.hexagon.begin(), t.hexagon.end(), [](int v) { return v == 0; });
    CHECK((classical_count(abc) == 1) == hex_zero);
  }
}

TEST_CASE("block basis") {
  for (const auto& abc : boundaries(2)) {
    for (int level = 0; level <= 5; ++level) {
      const auto basis = block_basis(abc, level);
      CHECK(static_cast<long>(basis.size()) == fused_count(abc, level));
      const auto f = q_min(abc);
      std::set<LocalPoint> distinct(basis.begin(), basis.end());
      CHECK(distinct.size() == basis.size());
      for (std::size_t l = 0; l < basis.size(); ++l) {
        CHECK(boundary(basis[l]) == abc);
        CHECK(basis[l].level() == level);
        CHECK(v_theta(basis[l]) == f->v_min + static_cast<int>(l));
        CHECK(canonicalize(basis[l].exponents, Rep::CB) == basis[l]);
      }
      const auto fiber = enumerate_fiber(abc, level);
      CHECK(std::set<LocalPoint>(fiber.begin(), fiber.end()) == distinct);
    }
  }
}

TEST_CASE("triangles") {
  const Triangle s = to_triangle(generator_point(S, Rep::BZ));
  CHECK(s.corners == std::array<int, 3>{0, 0, 0});
  CHECK(s.hexagon == std::array<int, 6>{1, 0, 1, 0, 1, 0});
  CHECK(to_triangle(generator_point(X, Rep::BZ)) == Triangle{});
  CHECK(to_triangle(generator_point(P21, Rep::BZ)).corners == std::array<int, 3>{0, 1, 0});
  const auto [corner, hex] = markov_element();
  CHECK(boundary(corner) == boundary(hex));
  CHECK(to_triangle(generator_point(S, Rep::BZ) + generator_point(T, Rep::BZ)) == hex);

  for (Rep rep : {Rep::BZ}) {
    for (int level = 0; level <= 4; ++level) {
      for (const auto& p : enumerate_level(level, rep)) {
        const Triangle t = to_triangle(p);
        CHECK(hexagon_conditions_hold(t));
        CHECK(boundary(t) == boundary(p));
        CHECK(from_triangle(t, level) == p);
      }
    }
  }
  CHECK_THROWS_AS(from_triangle(Triangle{{0, 0, 0}, {1, 0, 0, 0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from_triangle(hex, 1), std::invalid_argument);
}

TEST_CASE("hexagon conditions: any two imply the third") {
  Triangle t;
  auto& h = t.hexagon;
  for (int code = 0; code < 729; ++code) {
    int c = code;
    for (int i = 0; i < 6; ++i, c /= 3) h[i] = c % 3;
    const int held = (h[0] + h[1] == h[3] + h[4]) + (h[2] + h[3] == h[5] + h[0]) +
                     (h[4] + h[5] == h[1] + h[2]);
    CHECK(held != 2);
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(generator_point(X)) == "X");
  CHECK(to_string(LocalPoint{}) == "1");
  CHECK(to_string(generator_point(S) + generator_point(S) + generator_point(P13)) == "S^2 P13");
}
