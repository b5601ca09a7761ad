#include "sl3cb/weights.hpp"

#include <charconv>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>

namespace sl3cb {

namespace {

// Three times the invariant form in fundamental coordinates, normalized so
// that (theta|theta) = 2: (w1|w1) = (w2|w2) = 2/3, (w1|w2) = 1/3.
long form3(LatticeWeight x, LatticeWeight y) {
  return 2L * x.p * y.p + 1L * x.p * y.q + 1L * x.q * y.p + 2L * x.q * y.q;
}

constexpr LatticeWeight kAlpha1{2, -1};
constexpr LatticeWeight kAlpha2{-1, 2};
constexpr LatticeWeight kTheta{1, 1};
constexpr LatticeWeight kRho{1, 1};

LatticeWeight plus(LatticeWeight x, LatticeWeight y) { return {x.p + y.p, x.q + y.q}; }
LatticeWeight scaled(int k, LatticeWeight x) { return {k * x.p, k * x.q}; }

struct Folded {
  LatticeWeight weight;
  int sign;
};

// Reflects a shifted weight into the dominant chamber. Empty when the weight
// is fixed by a reflection.
std::optional<Folded> fold_finite(LatticeWeight v) {
  int sign = 1;
  for (;;) {
    if (v.p < 0) {
      v = {-v.p, v.q + v.p};
    } else if (v.q < 0) {
      v = {v.p + v.q, -v.q};
    } else {
      break;
    }
    sign = -sign;
  }
  if (v.p == 0 || v.q == 0) return std::nullopt;
  return Folded{v, sign};
}

// Shifted affine Weyl action at height k = L + 3: fold into the open alcove
// p > 0, q > 0, p + q < k.
std::optional<Folded> fold_affine(LatticeWeight v, int k) {
  int sign = 1;
  for (;;) {
    if (v.p < 0) {
      v = {-v.p, v.q + v.p};
    } else if (v.q < 0) {
      v = {v.p + v.q, -v.q};
    } else if (v.p + v.q > k) {
      v = {k - v.q, k - v.p};
    } else {
      break;
    }
    sign = -sign;
  }
  if (v.p == 0 || v.q == 0 || v.p + v.q == k) return std::nullopt;
  return Folded{v, sign};
}

LatticeWeight dominant_conjugate(LatticeWeight v) {
  for (;;) {
    if (v.p < 0) {
      v = {-v.p, v.q + v.p};
    } else if (v.q < 0) {
      v = {v.p + v.q, -v.q};
    } else {
      return v;
    }
  }
}

// True iff top - v is a non-negative integer combination of simple roots.
bool below(LatticeWeight v, LatticeWeight top) {
  int dp = top.p - v.p;
  int dq = top.q - v.q;
  int n1 = 2 * dp + dq;
  int n2 = dp + 2 * dq;
  return n1 >= 0 && n2 >= 0 && n1 % 3 == 0 && n2 % 3 == 0;
}

class DecompositionCache {
 public:
  const MultiplicityMap& get(Weight x, Weight y) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find({x, y});
      if (it != table_.end()) return it->second;
    }
    MultiplicityMap computed = tensor_decompose(x, y);
    std::unique_lock lock(mutex_);
    // std::map never invalidates references on insert.
    return table_.try_emplace({x, y}, std::move(computed)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<Weight, Weight>, MultiplicityMap> table_;
};

DecompositionCache& decomposition_cache() {
  static DecompositionCache cache;
  return cache;
}

}  // namespace

long weyl_dim(Weight w) {
  return static_cast<long>(w.a + 1) * (w.b + 1) * (w.a + w.b + 2) / 2;
}

Weight parse_weight(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("weight '" + std::string(text) + "': expected a,b");
  }
  auto read = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || value < 0) {
      throw std::invalid_argument("weight '" + std::string(text) +
                                  "': components must be non-negative integers");
    }
    return value;
  };
  return {read(text.substr(0, comma)), read(text.substr(comma + 1))};
}

std::string to_string(Weight w) { return std::to_string(w.a) + "," + std::to_string(w.b); }

std::vector<Weight> admissible_weights(int level) {
  std::vector<Weight> out;
  for (int a = 0; a <= level; ++a) {
    for (int b = 0; a + b <= level; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::map<LatticeWeight, long> weight_multiplicities(Weight w) {
  const LatticeWeight top{w.a, w.b};
  const int depth = w.a + w.b;  // top - lowest = (a+b)(alpha1 + alpha2)
  const long top_norm = form3(plus(top, kRho), plus(top, kRho));

  std::map<LatticeWeight, long> mult;
  mult[top] = 1;
  for (int layer = 1; layer <= 2 * depth; ++layer) {
    for (int n1 = std::max(0, layer - depth); n1 <= std::min(layer, depth); ++n1) {
      const int n2 = layer - n1;
      const LatticeWeight mu = plus(top, plus(scaled(-n1, kAlpha1), scaled(-n2, kAlpha2)));
      if (!below(dominant_conjugate(mu), top)) continue;

      long rhs = 0;
      for (LatticeWeight alpha : {kAlpha1, kAlpha2, kTheta}) {
        for (int k = 1;; ++k) {
          const LatticeWeight up = plus(mu, scaled(k, alpha));
          if (!below(up, top)) break;
          auto it = mult.find(up);
          if (it != mult.end()) rhs += form3(up, alpha) * it->second;
        }
      }
      rhs *= 2;
      const long lhs = top_norm - form3(plus(mu, kRho), plus(mu, kRho));
      if (lhs == 0 || rhs % lhs != 0) {
        throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
      }
      if (rhs != 0) mult[mu] = rhs / lhs;
    }
  }
  return mult;
}

MultiplicityMap tensor_decompose(Weight x, Weight y) {
  // Iterate over the smaller factor's weights.
  if (weyl_dim(x) > weyl_dim(y)) std::swap(x, y);
  std::map<Weight, long> signed_mult;
  for (const auto& [mu, m] : weight_multiplicities(x)) {
    const LatticeWeight shifted{y.a + mu.p + 1, y.b + mu.q + 1};
    if (auto folded = fold_finite(shifted)) {
      signed_mult[Weight{folded->weight.p - 1, folded->weight.q - 1}] += folded->sign * m;
    }
  }
  MultiplicityMap out;
  for (const auto& [nu, m] : signed_mult) {
    if (m < 0) throw std::logic_error("Brauer-Klimyk produced a negative multiplicity");
    if (m > 0) out.emplace(nu, m);
  }
  return out;
}

long triple_invariant_dim(Weight x, Weight y, Weight z) {
  const auto& decomposition = decomposition_cache().get(x, y);
  auto it = decomposition.find(dual(z));
  return it == decomposition.end() ? 0 : it->second;
}

long fusion_dim(Weight x, Weight y, Weight z, int level) {
  if (level < 0) return 0;
  if (theta_level(x) > level || theta_level(y) > level || theta_level(z) > level) return 0;
  const int height = level + 3;
  const Weight target = dual(z);
  long total = 0;
  for (const auto& [nu, m] : decomposition_cache().get(x, y)) {
    if (auto folded = fold_affine({nu.a + 1, nu.b + 1}, height)) {
      if (folded->weight.p - 1 == target.a && folded->weight.q - 1 == target.b) {
        total += folded->sign * m;
      }
    }
  }
  return total;
}

}  // namespace sl3cb
