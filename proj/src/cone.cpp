#include "sl3cb/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sl3cb::cone {

namespace {

using Wide = __int128;
using Matrix = std::vector<std::vector<Wide>>;

Wide checked_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("cone: 128-bit overflow");
  return out;
}

Wide checked_sub(Wide a, Wide b) {
  Wide out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("cone: 128-bit overflow");
  return out;
}

long narrow(Wide v) {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN)) {
    throw std::overflow_error("cone: value exceeds 64 bits");
  }
  return static_cast<long>(v);
}

Matrix widen(const std::vector<Vec>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

// Fraction-free row echelon form in place; returns pivot columns.
std::vector<int> bareiss(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  Wide prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = checked_sub(checked_mul(m[r][c], m[i][j]), checked_mul(m[i][c], m[r][j])) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

Wide determinant(Matrix m) {
  const std::size_t n = m.size();
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = checked_sub(checked_mul(m[k][k], m[i][j]), checked_mul(m[i][k], m[k][j])) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Vec project(const Vec& v, const std::vector<int>& coords) {
  Vec out;
  out.reserve(coords.size());
  for (int c : coords) out.push_back(v.at(c));
  return out;
}

long dot(const Vec& a, const Vec& b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += checked_mul(a[i], b[i]);
  return narrow(s);
}

void make_primitive(Vec& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (long& x : v) x /= g;
  }
}

using Bits = std::vector<std::uint64_t>;

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

int popcount(const Bits& a) {
  int n = 0;
  for (auto w : a) n += __builtin_popcountll(w);
  return n;
}

struct Ray {
  Vec v;
  Bits zeros;
};

}  // namespace

int rank(const std::vector<Vec>& rows) { return static_cast<int>(pivot_columns(rows).size()); }

std::vector<int> pivot_columns(const std::vector<Vec>& rows) {
  Matrix m = widen(rows);
  return bareiss(m);
}

Facets facets(const std::vector<Vec>& generators, int max_rank) {
  Facets out;
  if (generators.empty()) return out;
  out.coordinates = pivot_columns(generators);
  const int d = out.dimension();
  if (d > max_rank) {
    throw std::invalid_argument("cone rank " + std::to_string(d) + " exceeds the guard " +
                                std::to_string(max_rank));
  }
  std::vector<Vec> gens;
  for (const auto& g : generators) {
    Vec p = project(g, out.coordinates);
    if (std::any_of(p.begin(), p.end(), [](long x) { return x != 0; })) gens.push_back(std::move(p));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (d == 1) {
    out.normals.push_back({gens.front()[0] > 0 ? 1L : -1L});
    return out;
  }

  // Greedily pick d independent generators as the starting simplex.
  std::vector<int> basis;
  {
    std::vector<Vec> chosen;
    for (int i = 0; i < static_cast<int>(gens.size()) && static_cast<int>(basis.size()) < d; ++i) {
      chosen.push_back(gens[i]);
      if (rank(chosen) == static_cast<int>(chosen.size())) {
        basis.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }

  // Rays of {a : B a >= 0} are the columns of sign(det B) adj(B).
  Matrix b;
  for (int i : basis) b.emplace_back(gens[i].begin(), gens[i].end());
  const Wide det = determinant(b);
  const Wide det_sign = det > 0 ? 1 : -1;
  const std::size_t words = (gens.size() + 63) / 64;
  std::vector<bool> processed(gens.size(), false);
  for (int i : basis) processed[i] = true;

  std::vector<Ray> rays;
  for (int j = 0; j < d; ++j) {
    Vec col(d);
    for (int i = 0; i < d; ++i) {
      // adj(B)[i][j] = (-1)^{i+j} minor(j, i)
      Matrix minor;
      for (int r = 0; r < d; ++r) {
        if (r == j) continue;
        std::vector<Wide> row;
        for (int c = 0; c < d; ++c) {
          if (c != i) row.push_back(b[r][c]);
        }
        minor.push_back(std::move(row));
      }
      const Wide cof = ((i + j) % 2 == 0 ? 1 : -1) * determinant(minor);
      col[i] = narrow(det_sign * cof);
    }
    make_primitive(col);
    rays.push_back({std::move(col), Bits(words, 0)});
  }
  auto refresh_zeros = [&](Ray& r) {
    std::fill(r.zeros.begin(), r.zeros.end(), 0);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (processed[g] && dot(gens[g], r.v) == 0) r.zeros[g / 64] |= 1ULL << (g % 64);
    }
  };
  for (auto& r : rays) refresh_zeros(r);

  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (processed[g]) continue;
    std::vector<Ray> pos, neg, zero;
    std::vector<long> pos_val, neg_val;
    for (auto& r : rays) {
      const long val = dot(gens[g], r.v);
      if (val > 0) {
        pos.push_back(r);
        pos_val.push_back(val);
      } else if (val < 0) {
        neg.push_back(r);
        neg_val.push_back(val);
      } else {
        zero.push_back(r);
      }
    }
    processed[g] = true;
    std::vector<Ray> next;
    for (auto& r : pos) next.push_back(r);
    for (auto& r : zero) {
      r.zeros[g / 64] |= 1ULL << (g % 64);
      next.push_back(r);
    }
    for (std::size_t a = 0; a < pos.size(); ++a) {
      for (std::size_t c = 0; c < neg.size(); ++c) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = pos[a].zeros[w] & neg[c].zeros[w];
        if (popcount(common) < d - 2) continue;
        bool adjacent = true;
        for (const auto& r : rays) {
          if (r.v == pos[a].v || r.v == neg[c].v) continue;
          if (subset(common, r.zeros)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Vec v(d);
        for (int k = 0; k < d; ++k) {
          v[k] = narrow(checked_sub(checked_mul(pos_val[a], neg[c].v[k]),
                                    checked_mul(neg_val[c], pos[a].v[k])));
        }
        make_primitive(v);
        Ray r{std::move(v), common};
        r.zeros[g / 64] |= 1ULL << (g % 64);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  for (auto& r : rays) out.normals.push_back(r.v);
  std::sort(out.normals.begin(), out.normals.end());
  out.normals.erase(std::unique(out.normals.begin(), out.normals.end()), out.normals.end());
  return out;
}

std::vector<long> facet_values(const Facets& f, const Vec& point) {
  const Vec p = project(point, f.coordinates);
  std::vector<long> out;
  out.reserve(f.normals.size());
  for (const auto& n : f.normals) out.push_back(dot(n, p));
  return out;
}

bool in_cone(const Facets& f, const Vec& point) {
  for (long v : facet_values(f, point)) {
    if (v < 0) return false;
  }
  return true;
}

bool interior(const Facets& f, const Vec& point) {
  for (long v : facet_values(f, point)) {
    if (v <= 0) return false;
  }
  return true;
}

}  // namespace sl3cb::cone
