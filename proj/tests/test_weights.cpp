#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sl3cb/weights.hpp"

using namespace sl3cb;

namespace {

// Character of V(a,b) from Gelfand-Tsetlin patterns: top row (a+b, b, 0),
// middle row (m1, m2), bottom entry n. The weight in the e-basis is
// (n, m1+m2-n, l1+l2-m1-m2); fundamental coordinates are consecutive differences.
std::map<LatticeWeight, long> gt_character(Weight w) {
  const int l1 = w.a + w.b, l2 = w.b;
  std::map<LatticeWeight, long> out;
  for (int m1 = l2; m1 <= l1; ++m1) {
    for (int m2 = 0; m2 <= l2; ++m2) {
      for (int n = m2; n <= m1; ++n) {
        const int e1 = n, e2 = m1 + m2 - n, e3 = l1 + l2 - m1 - m2;
        out[LatticeWeight{e1 - e2, e2 - e3}] += 1;
      }
    }
  }
  return out;
}

// Tensor product by multiplying GT characters and peeling off highest weights.
std::map<Weight, long> gt_tensor(Weight x, Weight y) {
  std::map<LatticeWeight, long> product;
  for (const auto& [u, m] : gt_character(x)) {
    for (const auto& [v, n] : gt_character(y)) product[LatticeWeight{u.p + v.p, u.q + v.q}] += m * n;
  }
  std::map<Weight, long> out;
  for (;;) {
    const LatticeWeight* top = nullptr;
    for (const auto& [w, m] : product) {
      if (m == 0 || w.p < 0 || w.q < 0) continue;
      if (top == nullptr || w.p + w.q > top->p + top->q) top = &w;
    }
    if (top == nullptr) break;
    const Weight hw{top->p, top->q};
    const long mult = product[*top];
    out[hw] += mult;
    for (const auto& [w, m] : gt_character(hw)) product[w] -= mult * m;
  }
  for (const auto& [w, m] : product) REQUIRE(m == 0);
  return out;
}

}  // namespace

TEST_CASE("dual and weyl_dim") {
  CHECK(dual(Weight{1, 0}) == Weight{0, 1});
  CHECK(dual(Weight{0, 0}) == Weight{0, 0});
  CHECK(dual(Weight{2, 1}) == Weight{1, 2});
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) CHECK(dual(dual(Weight{a, b})) == Weight{a, b});
  }
  CHECK(weyl_dim({0, 0}) == 1);
  CHECK(weyl_dim({1, 0}) == 3);
  CHECK(weyl_dim({1, 1}) == 8);
}

TEST_CASE("parse_weight") {
  CHECK(parse_weight("2,1") == Weight{2, 1});
  CHECK_THROWS_AS(parse_weight("2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("-1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1, 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("a,b"), std::invalid_argument);
}

TEST_CASE("Freudenthal multiplicities match Gelfand-Tsetlin patterns") {
  for (const Weight& w : admissible_weights(6)) {
    CAPTURE(to_string(w));
    CHECK(weight_multiplicities(w) == gt_character(w));
  }
}

TEST_CASE("tensor_decompose") {
  CHECK(tensor_decompose({1, 0}, {0, 1}) == MultiplicityMap{{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(tensor_decompose({0, 0}, {2, 1}) == MultiplicityMap{{{2, 1}, 1}});
  CHECK(tensor_decompose({1, 1}, {1, 1}).at({1, 1}) == 2);
  for (const Weight& x : admissible_weights(3)) {
    for (const Weight& y : admissible_weights(3)) {
      const auto d = tensor_decompose(x, y);
      long total = 0;
      for (const auto& [w, m] : d) total += m * weyl_dim(w);
      CHECK(total == weyl_dim(x) * weyl_dim(y));
      CHECK(d == gt_tensor(x, y));
    }
  }
}

TEST_CASE("triple_invariant_dim examples and symmetries") {
  CHECK(triple_invariant_dim({0, 0}, {0, 0}, {0, 0}) == 1);
  CHECK(triple_invariant_dim({1, 0}, {1, 0}, {1, 0}) == 1);
  CHECK(triple_invariant_dim({1, 1}, {1, 1}, {1, 1}) == 2);
  const auto ws = admissible_weights(4);
  for (const Weight& x : ws) {
    for (const Weight& y : ws) {
      for (const Weight& z : ws) {
        const long n = triple_invariant_dim(x, y, z);
        CHECK(triple_invariant_dim(x, z, y) == n);
        CHECK(triple_invariant_dim(y, x, z) == n);
        CHECK(triple_invariant_dim(y, z, x) == n);
        CHECK(triple_invariant_dim(z, x, y) == n);
        CHECK(triple_invariant_dim(z, y, x) == n);
        CHECK(triple_invariant_dim(dual(x), dual(y), dual(z)) == n);
      }
    }
  }
}

TEST_CASE("fusion_dim examples") {
  CHECK(fusion_dim({0, 0}, {0, 0}, {0, 0}, 0) == 1);
  CHECK(fusion_dim({1, 1}, {1, 1}, {1, 1}, 2) == 1);
  CHECK(fusion_dim({1, 1}, {1, 1}, {1, 1}, 3) == 2);
  CHECK(fusion_dim({2, 0}, {0, 0}, {0, 2}, 1) == 0);
}

TEST_CASE("fusion_dim climbs by 0 or 1 per level and stabilizes at the classical value") {
  const auto ws = admissible_weights(4);
  for (const Weight& x : ws) {
    for (const Weight& y : ws) {
      for (const Weight& z : ws) {
        long prev = 0;
        for (int level = 0; level <= 12; ++level) {
          const long f = fusion_dim(x, y, z, level);
          CHECK(f >= 0);
          CHECK((f - prev == 0 || f - prev == 1));
          CHECK(fusion_dim(y, z, x, level) == f);
          CHECK(fusion_dim(y, x, z, level) == f);
          prev = f;
        }
        CHECK(prev == triple_invariant_dim(x, y, z));
      }
    }
  }
}

TEST_CASE("fusion with the vacuum pairs a weight with its dual") {
  for (int level = 0; level <= 6; ++level) {
    for (const Weight& x : admissible_weights(level)) {
      CHECK(fusion_dim(x, dual(x), {0, 0}, level) == 1);
      for (const Weight& y : admissible_weights(level)) {
        if (y != dual(x)) CHECK(fusion_dim(x, y, {0, 0}, level) == 0);
      }
    }
  }
}
