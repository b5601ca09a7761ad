#include "sl3cb/verlinde.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>

namespace sl3cb {

namespace {

// Three times the invariant form, (theta|theta) = 2.
long form3(long p1, long q1, long p2, long q2) { return 2 * p1 * p2 + p1 * q2 + q1 * p2 + 2 * q1 * q2; }

std::complex<double> alternant(long p, long q, Weight xi, int k) {
  struct Image {
    long p, q;
    int sign;
  };
  const Image orbit[6] = {{p, q, 1},       {-p, p + q, -1}, {p + q, -q, -1},
                          {-p - q, p, 1},  {q, -p - q, 1},  {-q, -p, -1}};
  std::complex<double> sum = 0.0;
  for (const auto& w : orbit) {
    // Reduce the exponent modulo 3k before converting to floating point.
    const long num = form3(w.p, w.q, xi.a, xi.b) % (3L * k);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / (3.0 * k);
    sum += static_cast<double>(w.sign) * std::polar(1.0, angle);
  }
  return sum;
}

long fusion_expectation(int genus, const std::vector<Weight>& leaves, int level) {
  const auto weights = admissible_weights(level);
  if (genus == 1) {
    const Weight lambda = leaves.empty() ? Weight{0, 0} : leaves[0];
    long total = 0;
    for (const Weight& mu : weights) total += fusion_dim(mu, dual(mu), lambda, level);
    return total;
  }
  // genus 2, no leaves: two loops joined by an edge carrying kappa.
  long total = 0;
  for (const Weight& kappa : weights) {
    long left = 0, right = 0;
    for (const Weight& mu : weights) {
      left += fusion_dim(mu, dual(mu), kappa, level);
      right += fusion_dim(mu, dual(mu), dual(kappa), level);
    }
    total += left * right;
  }
  return total;
}

struct BatteryCase {
  int genus;
  std::vector<Weight> leaves;
};

std::vector<BatteryCase> battery(int level) {
  std::vector<BatteryCase> cases{{1, {}}, {2, {}}};
  for (const Weight& w : admissible_weights(std::min(level, 2))) cases.push_back({1, {w}});
  return cases;
}

}  // namespace

std::complex<double> weyl_character(Weight lambda, Weight xi, int k) {
  return alternant(lambda.a + 1, lambda.b + 1, xi, k) / alternant(1, 1, xi, k);
}

VerlindeValue verlinde_evaluate(int genus, const std::vector<Weight>& leaves, int level,
                                double torus_order) {
  if (genus < 0) throw std::invalid_argument("verlinde: genus must be non-negative");
  if (level < 0) throw std::invalid_argument("verlinde: level must be non-negative");
  for (const Weight& w : leaves) {
    if (theta_level(w) > level) return {};
  }
  const int k = level + 3;
  std::complex<double> sum = 0.0;
  for (const Weight& mu : admissible_weights(level)) {
    const Weight xi{mu.a + 1, mu.b + 1};
    std::complex<double> term = 1.0;
    for (const Weight& lambda : leaves) term *= weyl_character(lambda, xi, k);
    double sines = 1.0;
    for (int root : {xi.a, xi.b, xi.a + xi.b}) {
      sines *= std::abs(2.0 * std::sin(std::numbers::pi * root / k));
    }
    sum += term * std::pow(sines, 2 - 2 * genus);
  }
  sum *= std::pow(torus_order, genus - 1);
  VerlindeValue out;
  out.value = sum.real();
  out.rounded = std::lround(sum.real());
  out.residual = std::abs(sum.real() - static_cast<double>(out.rounded)) + std::abs(sum.imag());
  return out;
}

std::string format_calibration_table(const std::vector<CalibrationRow>& table) {
  std::string out = "factor  torus_order  cases  mismatches  max_residual\n";
  for (const auto& row : table) {
    char line[128];
    std::snprintf(line, sizeof line, "%6d  %11ld  %5d  %10d  %.3e\n", row.factor, row.torus_order,
                  row.cases, row.mismatches, row.max_residual);
    out += line;
  }
  return out;
}

Calibration calibrate_torus_order(int level, const std::vector<int>& candidates) {
  if (level < 0) throw std::invalid_argument("calibrate: level must be non-negative");
  const auto cases = battery(level);
  std::vector<long> expected;
  for (const auto& c : cases) expected.push_back(fusion_expectation(c.genus, c.leaves, level));

  Calibration cal;
  cal.level = level;
  const long k = level + 3;
  int matches = 0;
  for (int factor : candidates) {
    CalibrationRow row;
    row.factor = factor;
    row.torus_order = factor * k * k;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto v = verlinde_evaluate(cases[i].genus, cases[i].leaves, level,
                                       static_cast<double>(row.torus_order));
      ++row.cases;
      const double err = std::abs(v.value - static_cast<double>(expected[i]));
      row.max_residual = std::max(row.max_residual, err);
      if (err > kVerlindeTolerance) ++row.mismatches;
    }
    if (row.mismatches == 0) {
      ++matches;
      cal.factor = factor;
      cal.torus_order = row.torus_order;
    }
    cal.table.push_back(row);
  }
  if (matches != 1) {
    throw CalibrationError("torus order calibration at level " + std::to_string(level) + ": " +
                               std::to_string(matches) + " candidates match\n" +
                               format_calibration_table(cal.table),
                           cal.table);
  }
  return cal;
}

long verlinde_dim(int genus, const std::vector<Weight>& leaves, int level, long torus_order) {
  const auto v = verlinde_evaluate(genus, leaves, level, static_cast<double>(torus_order));
  if (v.residual > kVerlindeTolerance) {
    throw std::runtime_error("verlinde: residual " + std::to_string(v.residual) +
                             " above tolerance; torus order " + std::to_string(torus_order) +
                             " is likely miscalibrated");
  }
  return v.rounded;
}

long verlinde_dim(int genus, const std::vector<Weight>& leaves, int level) {
  static std::mutex mutex;
  static std::map<int, long> calibrated;
  long order = 0;
  {
    std::lock_guard lock(mutex);
    auto it = calibrated.find(level);
    if (it == calibrated.end()) {
      it = calibrated.emplace(level, calibrate_torus_order(level).torus_order).first;
    }
    order = it->second;
  }
  return verlinde_dim(genus, leaves, level, order);
}

}  // namespace sl3cb
