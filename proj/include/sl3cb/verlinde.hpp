#pragma once

// Numeric Verlinde formula for sl3 at level L:
//
//   dim = |T|^(g-1) sum_mu prod_i chi_{lambda_i}(zeta_mu) prod_alpha |2 sin(pi (alpha, mu+rho)/(L+3))|^(2-2g)
//
// with zeta_mu = exp(2 pi i (mu+rho)/(L+3)). The torus order |T| is not taken
// on faith: calibrate_torus_order picks it from c (L+3)^2, c in {1, 3, 9},
// against sums of Kac-Walton fusion coefficients.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl3cb/weights.hpp"

namespace sl3cb {

inline constexpr double kVerlindeTolerance = 1e-6;

struct VerlindeValue {
  double value = 0.0;
  long rounded = 0;
  /// |value - rounded| plus the size of the imaginary part.
  double residual = 0.0;
};

/// Weyl character of lambda at exp(2 pi i xi / k), xi a shifted weight.
std::complex<double> weyl_character(Weight lambda, Weight xi, int k);

/// Raw evaluation with an explicit torus order. Non-integrable leaf weights give 0.
VerlindeValue verlinde_evaluate(int genus, const std::vector<Weight>& leaves, int level,
                                double torus_order);

struct CalibrationRow {
  int factor = 0;
  long torus_order = 0;
  int cases = 0;
  int mismatches = 0;
  double max_residual = 0.0;
};

struct Calibration {
  int level = 0;
  int factor = 0;
  long torus_order = 0;
  std::vector<CalibrationRow> table;
};

class CalibrationError : public std::runtime_error {
 public:
  CalibrationError(const std::string& what, std::vector<CalibrationRow> table)
      : std::runtime_error(what), table_(std::move(table)) {}
  const std::vector<CalibrationRow>& table() const { return table_; }

 private:
  std::vector<CalibrationRow> table_;
};

std::string format_calibration_table(const std::vector<CalibrationRow>& table);

/// Battery: genus 1 with no leaf and one leaf of a+b <= min(L,2), genus 2
/// with no leaf; expectations from fusion coefficients. Exactly one candidate
/// must reproduce all of them, otherwise CalibrationError.
/// `candidates` defaults to {1, 3, 9}.
Calibration calibrate_torus_order(int level, const std::vector<int>& candidates = {1, 3, 9});

/// Calibrated evaluation; throws std::runtime_error if the residual exceeds
/// kVerlindeTolerance.
long verlinde_dim(int genus, const std::vector<Weight>& leaves, int level);
long verlinde_dim(int genus, const std::vector<Weight>& leaves, int level, long torus_order);

}  // namespace sl3cb
