#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "sl3cb/global.hpp"
#include "sl3cb/verlinde.hpp"

using namespace sl3cb;

TEST_CASE("trivial character is one") {
  for (int k = 3; k <= 6; ++k) {
    for (const Weight& mu : admissible_weights(k - 3)) {
      const auto chi = weyl_character({0, 0}, {mu.a + 1, mu.b + 1}, k);
      CHECK(std::abs(chi - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("examples") {
  CHECK(verlinde_dim(0, {{1, 0}, {1, 0}, {1, 0}}, 1) == 1);
  CHECK(verlinde_dim(1, {{0, 0}}, 1) == 3);
  CHECK(verlinde_dim(1, {}, 2) == 6);
  CHECK(verlinde_dim(2, {}, 1) == 9);
  CHECK(verlinde_dim(0, {{3, 0}, {0, 0}, {0, 3}}, 2) == 0);
}

TEST_CASE("calibration picks three times the square of the shifted level") {
  for (int level = 0; level <= 4; ++level) {
    const auto cal = calibrate_torus_order(level);
    CHECK(cal.factor == 3);
    CHECK(cal.torus_order == 3L * (level + 3) * (level + 3));
    REQUIRE(cal.table.size() == 3);
    CHECK(cal.table[0].mismatches > 0);
    CHECK(cal.table[1].mismatches == 0);
    CHECK(cal.table[2].mismatches > 0);
  }
}

TEST_CASE("miscalibration reports every candidate") {
  try {
    calibrate_torus_order(1, {1, 9});
    FAIL("expected a calibration error");
  } catch (const CalibrationError& e) {
    CHECK(e.table().size() == 2);
    CHECK(std::string(e.what()).find("max_residual") != std::string::npos);
  }
  CHECK_THROWS_AS(verlinde_dim(2, {}, 1, 17), std::runtime_error);
}

TEST_CASE("Verlinde agrees with the lattice point count") {
  struct Case {
    TrivalentGraph g;
    int max_theta;
    int max_level;
  };
  const std::vector<Case> cases{{caterpillar(3), 2, 3}, {caterpillar(4), 2, 3},
                                {gamma_graph(1, 1), 2, 3}, {gamma_graph(1, 2), 2, 3},
                                {dumbbell(), 0, 3},        {theta(), 0, 3}};
  for (const auto& c : cases) {
    std::vector<LeafWeights> tuples{{}};
    for (int i = 0; i < c.g.leaf_count(); ++i) {
      std::vector<LeafWeights> next;
      for (const auto& t : tuples) {
        for (const Weight& w : admissible_weights(c.max_theta)) {
          auto u = t;
          u.push_back(w);
          next.push_back(u);
        }
      }
      tuples = std::move(next);
    }
    for (const auto& t : tuples) {
      for (int level = 0; level <= c.max_level; ++level) {
        CHECK(verlinde_dim(c.g.genus(), t, level) == global_dim(c.g, t, level));
      }
    }
  }
}

TEST_CASE("residuals stay small") {
  const long order = calibrate_torus_order(3).torus_order;
  for (int genus = 0; genus <= 3; ++genus) {
    const auto v = verlinde_evaluate(genus, {{1, 1}, {1, 1}}, 3, static_cast<double>(order));
    CHECK(v.residual < kVerlindeTolerance);
    CHECK(v.rounded >= 0);
  }
  CHECK(verlinde_evaluate(1, {{5, 0}}, 3, 1.0).value == 0.0);
}
