#pragma once

// Symbolic check of the cubic relation presenting the triple-invariant ring.
// Polynomials live in the 18 matrix entries of X (basis x) and Y (basis y):
// row k is the basis index, column i the tensor factor.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sl3cb::classical {

inline constexpr int kVarCount = 18;

using Monomial = std::array<std::uint8_t, kVarCount>;

int x_var(int row, int col);
int y_var(int row, int col);

/// Sparse integer polynomial; no zero coefficients are stored.
class Poly18 {
 public:
  Poly18() = default;
  static Poly18 constant(long c);
  static Poly18 variable(int index);

  const std::map<Monomial, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, long c);

  Poly18& operator+=(const Poly18& other);
  Poly18& operator-=(const Poly18& other);
  friend Poly18 operator+(Poly18 a, const Poly18& b) { return a += b; }
  friend Poly18 operator-(Poly18 a, const Poly18& b) { return a -= b; }
  friend Poly18 operator*(const Poly18& a, const Poly18& b);
  friend Poly18 operator*(long c, const Poly18& a);
  friend bool operator==(const Poly18&, const Poly18&) = default;

  long evaluate(const std::array<long, kVarCount>& point) const;

 private:
  std::map<Monomial, long> terms_;
};

/// How the pairing invariants P_ij are read off X and Y.
///  Column:    P_ij = <column i of X, column j of Y>
///  Transpose: P_ij = <row i of X, row j of Y>
/// The Oriented variants negate the anticyclic P21, P32, P13.
enum class Convention { Column, Transpose, OrientedColumn, OrientedTranspose };

std::string to_string(Convention c);

/// S = det X, T = det Y and P11..P33, keyed "S", "T", "P11", ..., "P33".
std::map<std::string, Poly18> invariant_generators(Convention c = Convention::OrientedColumn);

/// Which incidence term leads when rewriting P_ii = 0.
enum class EliminationOrder { FirstTerm, LastTerm };

/// Normal form modulo the ideal (P11, P22, P33) of the given convention.
Poly18 reduce_mod_incidence(const Poly18& p, Convention c = Convention::OrientedColumn,
                            EliminationOrder order = EliminationOrder::FirstTerm);

/// Determinant of a 3x3 matrix of polynomials (Leibniz expansion).
Poly18 det3(const std::array<std::array<Poly18, 3>, 3>& m);

/// S T - P12 P23 P31 + P21 P32 P13 for the convention (with optional sign flip
/// on the last term, for negative checks).
Poly18 presentation_relation(Convention c, int anticyclic_sign = +1);

struct PresentationCheck {
  bool holds = false;
  Convention convention = Convention::Column;
  std::vector<std::pair<Convention, bool>> tried;
};

/// Tries Column, Transpose, OrientedColumn, OrientedTranspose in order and
/// stops at the first convention under which the relation reduces to zero.
PresentationCheck check_presentation_relation();

bool verify_presentation_relation();

}  // namespace sl3cb::classical
