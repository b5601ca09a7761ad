#include "sl3cb/classical.hpp"

#include <stdexcept>

namespace sl3cb::classical {

int x_var(int row, int col) { return 3 * row + col; }
int y_var(int row, int col) { return 9 + 3 * row + col; }

Poly18 Poly18::constant(long c) {
  Poly18 p;
  p.add_term(Monomial{}, c);
  return p;
}

Poly18 Poly18::variable(int index) {
  Monomial m{};
  m[index] = 1;
  Poly18 p;
  p.add_term(m, 1);
  return p;
}

void Poly18::add_term(const Monomial& m, long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly18& Poly18::operator+=(const Poly18& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly18& Poly18::operator-=(const Poly18& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly18 operator*(const Poly18& a, const Poly18& b) {
  Poly18 out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{};
      for (int i = 0; i < kVarCount; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly18 operator*(long c, const Poly18& a) {
  Poly18 out;
  for (const auto& [m, v] : a.terms_) out.add_term(m, c * v);
  return out;
}

long Poly18::evaluate(const std::array<long, kVarCount>& point) const {
  long total = 0;
  for (const auto& [m, c] : terms_) {
    long term = c;
    for (int i = 0; i < kVarCount; ++i) {
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

std::string to_string(Convention c) {
  switch (c) {
    case Convention::Column: return "column";
    case Convention::Transpose: return "transpose";
    case Convention::OrientedColumn: return "oriented-column";
    case Convention::OrientedTranspose: return "oriented-transpose";
  }
  return "?";
}

namespace {

bool transposed(Convention c) {
  return c == Convention::Transpose || c == Convention::OrientedTranspose;
}

bool oriented(Convention c) {
  return c == Convention::OrientedColumn || c == Convention::OrientedTranspose;
}

bool anticyclic(int i, int j) { return (i == 1 && j == 0) || (i == 2 && j == 1) || (i == 0 && j == 2); }

// The three monomials of the pairing <X_i, Y_j> (i, j are 0-based factor indices).
std::array<std::pair<int, int>, 3> pairing_terms(Convention c, int i, int j) {
  std::array<std::pair<int, int>, 3> out{};
  for (int k = 0; k < 3; ++k) {
    out[k] = transposed(c) ? std::pair{x_var(i, k), y_var(j, k)}
                           : std::pair{x_var(k, i), y_var(k, j)};
  }
  return out;
}

Poly18 pairing(Convention c, int i, int j) {
  Poly18 p;
  for (auto [xv, yv] : pairing_terms(c, i, j)) p += Poly18::variable(xv) * Poly18::variable(yv);
  if (oriented(c) && anticyclic(i, j)) p = -1 * p;
  return p;
}

Poly18 matrix_det(bool of_y) {
  std::array<std::array<Poly18, 3>, 3> m;
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) {
      m[r][col] = Poly18::variable(of_y ? y_var(r, col) : x_var(r, col));
    }
  }
  return det3(m);
}

}  // namespace

Poly18 det3(const std::array<std::array<Poly18, 3>, 3>& m) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                      {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  static constexpr int signs[6] = {1, 1, 1, -1, -1, -1};
  Poly18 out;
  for (int p = 0; p < 6; ++p) {
    out += signs[p] * (m[0][perms[p][0]] * m[1][perms[p][1]] * m[2][perms[p][2]]);
  }
  return out;
}

std::map<std::string, Poly18> invariant_generators(Convention c) {
  std::map<std::string, Poly18> out;
  out["S"] = matrix_det(false);
  out["T"] = matrix_det(true);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out["P" + std::to_string(i + 1) + std::to_string(j + 1)] = pairing(c, i, j);
    }
  }
  return out;
}

Poly18 reduce_mod_incidence(const Poly18& p, Convention c, EliminationOrder order) {
  // Leading term of each P_ii and the remaining two terms. The three forms
  // use disjoint variables, so their leading terms are coprime and the
  // rewriting reaches the unique normal form.
  struct Rule {
    int lead_x, lead_y;
    std::array<std::pair<int, int>, 2> rest;
  };
  std::array<Rule, 3> rules{};
  for (int i = 0; i < 3; ++i) {
    auto terms = pairing_terms(c, i, i);
    const int lead = order == EliminationOrder::FirstTerm ? 0 : 2;
    rules[i].lead_x = terms[lead].first;
    rules[i].lead_y = terms[lead].second;
    int r = 0;
    for (int k = 0; k < 3; ++k) {
      if (k != lead) rules[i].rest[r++] = terms[k];
    }
  }

  Poly18 current = p;
  for (;;) {
    Poly18 next;
    bool changed = false;
    for (const auto& [m, coeff] : current.terms()) {
      const Rule* hit = nullptr;
      for (const auto& rule : rules) {
        if (m[rule.lead_x] > 0 && m[rule.lead_y] > 0) {
          hit = &rule;
          break;
        }
      }
      if (hit == nullptr) {
        next.add_term(m, coeff);
        continue;
      }
      changed = true;
      for (auto [xv, yv] : hit->rest) {
        Monomial replaced = m;
        replaced[hit->lead_x]--;
        replaced[hit->lead_y]--;
        replaced[xv]++;
        replaced[yv]++;
        next.add_term(replaced, -coeff);
      }
    }
    current = std::move(next);
    if (!changed) return current;
  }
}

Poly18 presentation_relation(Convention c, int anticyclic_sign) {
  auto g = invariant_generators(c);
  return g["S"] * g["T"] - g["P12"] * g["P23"] * g["P31"] +
         anticyclic_sign * (g["P21"] * g["P32"] * g["P13"]);
}

PresentationCheck check_presentation_relation() {
  PresentationCheck check;
  for (Convention c : {Convention::Column, Convention::Transpose, Convention::OrientedColumn,
                       Convention::OrientedTranspose}) {
    const bool holds = reduce_mod_incidence(presentation_relation(c), c).is_zero();
    check.tried.emplace_back(c, holds);
    if (holds) {
      check.holds = true;
      check.convention = c;
      break;
    }
  }
  return check;
}

bool verify_presentation_relation() { return check_presentation_relation().holds; }

}  // namespace sl3cb::classical
