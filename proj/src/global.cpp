#include "sl3cb/global.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace sl3cb {

namespace {

std::string edge_name(const TrivalentGraph& g, int e) {
  const auto& [h1, h2] = g.edges()[e];
  auto half = [&](HalfEdge h) {
    return "(" + std::to_string(g.vertex_ids()[h.vertex]) + "," + std::to_string(h.slot + 1) + ")";
  };
  return "edge " + std::to_string(e) + " " + half(h1) + "-" + half(h2);
}

void check_arity(const TrivalentGraph& g, const std::optional<LeafWeights>& leaves) {
  if (leaves && static_cast<int>(leaves->size()) != g.leaf_count()) {
    throw std::invalid_argument("graph has " + std::to_string(g.leaf_count()) + " leaves but " +
                                std::to_string(leaves->size()) + " weights were given");
  }
}

// Dense index of the weights with a+b <= level.
class WeightIndex {
 public:
  explicit WeightIndex(int level) : level_(level), weights_(admissible_weights(level)) {
    index_.assign((level + 1) * (level + 1), -1);
    for (int i = 0; i < static_cast<int>(weights_.size()); ++i) {
      index_[weights_[i].a * (level + 1) + weights_[i].b] = i;
    }
  }
  int size() const { return static_cast<int>(weights_.size()); }
  const Weight& operator[](int i) const { return weights_[i]; }
  int index(Weight w) const {
    if (w.a < 0 || w.b < 0 || w.a + w.b > level_) return -1;
    return index_[w.a * (level_ + 1) + w.b];
  }

 private:
  int level_;
  std::vector<Weight> weights_;
  std::vector<int> index_;
};

// Where each vertex slot gets its weight: a fixed leaf weight or a summed
// variable (edge variables first, then free leaves), possibly dualized.
struct SlotSource {
  int variable = -1;
  bool dualized = false;
  Weight fixed{};
};

struct Odometer {
  int variables = 0;
  std::vector<std::array<SlotSource, 3>> sources;
};

Odometer build_odometer(const TrivalentGraph& g, const std::optional<LeafWeights>& leaves) {
  Odometer od;
  od.variables = g.edge_count() + (leaves ? 0 : g.leaf_count());
  od.sources.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int s = 0; s < 3; ++s) {
      const SlotUse& use = g.slot_use(v, s);
      SlotSource& src = od.sources[v][s];
      if (use.kind == SlotUse::EdgeEnd) {
        src.variable = use.index;
        src.dualized = use.end == 1;
      } else if (leaves) {
        src.fixed = (*leaves)[use.index];
      } else {
        src.variable = g.edge_count() + use.index;
      }
    }
  }
  return od;
}

long tuple_count(int base, int digits) {
  long total = 1;
  for (int i = 0; i < digits; ++i) {
    if (total > std::numeric_limits<long>::max() / base / 4) {
      throw std::length_error("sum_product: too many weight tuples");
    }
    total *= base;
  }
  return total;
}

long evaluate_tuple(const Odometer& od, const WeightIndex& wi, long flat, int level,
                    const LocalCount& count, std::vector<int>& digits) {
  for (int i = 0; i < od.variables; ++i) {
    digits[i] = static_cast<int>(flat % wi.size());
    flat /= wi.size();
  }
  long product = 1;
  for (const auto& slots : od.sources) {
    Boundary abc;
    for (int s = 0; s < 3; ++s) {
      const SlotSource& src = slots[s];
      if (src.variable < 0) {
        abc[s] = src.fixed;
      } else {
        const Weight w = wi[digits[src.variable]];
        abc[s] = src.dualized ? dual(w) : w;
      }
    }
    product *= count(abc, level);
    if (product == 0) return 0;
  }
  return product;
}

}  // namespace

GlobalPoint assemble(const TrivalentGraph& g, std::vector<LocalPoint> parts, int level) {
  if (static_cast<int>(parts.size()) != g.vertex_count()) {
    throw std::invalid_argument("assemble: expected " + std::to_string(g.vertex_count()) +
                                " local points, got " + std::to_string(parts.size()));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (parts[v].rep != Rep::CB) throw std::invalid_argument("assemble: local points must be CB");
    if (parts[v].level() != level) {
      throw std::invalid_argument("assemble: vertex " + std::to_string(g.vertex_ids()[v]) +
                                  " has level " + std::to_string(parts[v].level()) + ", expected " +
                                  std::to_string(level));
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [h1, h2] = g.edges()[e];
    const Weight w1 = boundary(parts[h1.vertex])[h1.slot];
    const Weight w2 = boundary(parts[h2.vertex])[h2.slot];
    if (w1 != dual(w2)) {
      throw std::invalid_argument("assemble: " + edge_name(g, e) + " carries " + to_string(w1) +
                                  " and " + to_string(w2) + ", which are not dual");
    }
  }
  return GlobalPoint{std::move(parts), level};
}

bool is_valid(const TrivalentGraph& g, const GlobalPoint& p) {
  try {
    assemble(g, p.parts, p.level);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

LeafWeights leaf_weights(const TrivalentGraph& g, const GlobalPoint& p) {
  LeafWeights out;
  for (const HalfEdge& h : g.leaves()) out.push_back(boundary(p.parts[h.vertex])[h.slot]);
  return out;
}

GlobalPoint add(const GlobalPoint& p, const GlobalPoint& q) {
  if (p.parts.size() != q.parts.size()) throw std::invalid_argument("add: vertex count mismatch");
  GlobalPoint out{p.parts, p.level + q.level};
  for (std::size_t v = 0; v < p.parts.size(); ++v) out.parts[v] = p.parts[v] + q.parts[v];
  return out;
}

std::optional<GlobalPoint> subtract(const GlobalPoint& p, const GlobalPoint& q) {
  if (p.parts.size() != q.parts.size()) throw std::invalid_argument("subtract: vertex count mismatch");
  if (q.level > p.level) return std::nullopt;
  GlobalPoint out{{}, p.level - q.level};
  out.parts.reserve(p.parts.size());
  for (std::size_t v = 0; v < p.parts.size(); ++v) {
    auto d = subtract(p.parts[v], q.parts[v]);
    if (!d) return std::nullopt;
    out.parts.push_back(*d);
  }
  return out;
}

std::vector<long> embed(const GlobalPoint& p) {
  std::vector<long> out;
  out.reserve(8 * p.parts.size());
  for (const auto& part : p.parts) {
    auto e = embed(part);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

std::string to_string(const GlobalPoint& p) {
  std::string out = "[";
  for (std::size_t v = 0; v < p.parts.size(); ++v) {
    if (v > 0) out += " | ";
    out += to_string(p.parts[v]);
  }
  return out + "]";
}

long fused_local(const Boundary& abc, int level) { return fused_count(abc, level); }

long fusion_local(const Boundary& abc, int level) {
  return fusion_dim(abc[0], abc[1], abc[2], level);
}

long sum_product(const TrivalentGraph& g, const std::optional<LeafWeights>& leaves, int level,
                 const LocalCount& count) {
  check_arity(g, leaves);
  if (level < 0) return 0;
  const Odometer od = build_odometer(g, leaves);
  const WeightIndex wi(level);
  const long tuples = tuple_count(wi.size(), od.variables);
  long total = 0;
#pragma omp parallel reduction(+ : total)
  {
    std::vector<int> digits(od.variables);
#pragma omp for schedule(static)
    for (long flat = 0; flat < tuples; ++flat) {
      total += evaluate_tuple(od, wi, flat, level, count, digits);
    }
  }
  return total;
}

long sum_product_serial(const TrivalentGraph& g, const std::optional<LeafWeights>& leaves,
                        int level, const LocalCount& count) {
  check_arity(g, leaves);
  if (level < 0) return 0;
  const Odometer od = build_odometer(g, leaves);
  const WeightIndex wi(level);
  const long tuples = tuple_count(wi.size(), od.variables);
  std::vector<int> digits(od.variables);
  long total = 0;
  for (long flat = 0; flat < tuples; ++flat) {
    total += evaluate_tuple(od, wi, flat, level, count, digits);
  }
  return total;
}

long sum_product_tree(const TrivalentGraph& g, const std::optional<LeafWeights>& leaves, int level,
                      const LocalCount& count) {
  check_arity(g, leaves);
  if (g.genus() != 0) throw std::invalid_argument("sum_product_tree: graph is not a tree");
  if (level < 0) return 0;
  const WeightIndex wi(level);
  const int a = wi.size();

  // Each option is (weight, multiplicity) for one slot.
  using Options = std::vector<std::pair<Weight, long>>;

  // message(v, parent_slot)[i]: sum over v's subtree with weight wi[i] at parent_slot.
  std::function<std::vector<long>(int, int)> message;
  auto slot_options = [&](int v, int s) {
    Options opts;
    const SlotUse& use = g.slot_use(v, s);
    if (use.kind == SlotUse::Leaf) {
      if (leaves) {
        opts.emplace_back((*leaves)[use.index], 1);
      } else {
        for (int i = 0; i < a; ++i) opts.emplace_back(wi[i], 1);
      }
      return opts;
    }
    const HalfEdge child = g.opposite({v, s});
    const std::vector<long> m = message(child.vertex, child.slot);
    for (int i = 0; i < a; ++i) {
      const long factor = m[wi.index(dual(wi[i]))];
      if (factor != 0) opts.emplace_back(wi[i], factor);
    }
    return opts;
  };
  auto combine = [&](const Options& o1, const Options& o2, int s1, int s2, int s_fixed,
                     Weight fixed) {
    long sum = 0;
    for (const auto& [w1, f1] : o1) {
      for (const auto& [w2, f2] : o2) {
        Boundary abc;
        abc[s1] = w1;
        abc[s2] = w2;
        abc[s_fixed] = fixed;
        const long c = count(abc, level);
        if (c != 0) sum += c * f1 * f2;
      }
    }
    return sum;
  };
  message = [&](int v, int parent_slot) {
    const int s1 = (parent_slot + 1) % 3;
    const int s2 = (parent_slot + 2) % 3;
    const Options o1 = slot_options(v, s1);
    const Options o2 = slot_options(v, s2);
    std::vector<long> out(a, 0);
    for (int i = 0; i < a; ++i) out[i] = combine(o1, o2, s1, s2, parent_slot, wi[i]);
    return out;
  };

  // Root at vertex 0: treat slot 0 as the summed "parent" slot.
  const Options o0 = slot_options(0, 0);
  const Options o1 = slot_options(0, 1);
  const Options o2 = slot_options(0, 2);
  long total = 0;
  for (const auto& [w0, f0] : o0) total += f0 * combine(o1, o2, 1, 2, 0, w0);
  return total;
}

long global_dim(const TrivalentGraph& g, const LeafWeights& leaves, int level) {
  return sum_product(g, leaves, level, fused_local);
}

long oracle_dim(const TrivalentGraph& g, const LeafWeights& leaves, int level) {
  return sum_product(g, leaves, level, fusion_local);
}

std::vector<GlobalPoint> enumerate_global(const TrivalentGraph& g,
                                          const std::optional<LeafWeights>& leaves, int level,
                                          std::size_t cap) {
  check_arity(g, leaves);
  if (level < 0) return {};
  const std::vector<LocalPoint> pool = enumerate_level(level, Rep::CB);
  std::vector<Boundary> pool_boundary;
  pool_boundary.reserve(pool.size());
  for (const auto& p : pool) pool_boundary.push_back(boundary(p));

  // by_slot[s][w] lists pool indices whose boundary at slot s is w.
  std::array<std::map<Weight, std::vector<int>>, 3> by_slot;
  for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
    for (int s = 0; s < 3; ++s) by_slot[s][pool_boundary[i][s]].push_back(i);
  }

  // Visit vertices breadth-first so edge constraints bind early.
  std::vector<int> order{0};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int s = 0; s < 3; ++s) {
      if (g.slot_use(order[k], s).kind != SlotUse::EdgeEnd) continue;
      const int w = g.opposite({order[k], s}).vertex;
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }

  std::vector<GlobalPoint> out;
  std::vector<int> chosen(g.vertex_count(), -1);
  const std::vector<int> all_indices = [&] {
    std::vector<int> v(pool.size());
    for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = i;
    return v;
  }();

  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (k == order.size()) {
      if (out.size() >= cap) {
        throw std::length_error("enumerate_global: more than " + std::to_string(cap) + " points");
      }
      GlobalPoint p{{}, level};
      for (int v = 0; v < g.vertex_count(); ++v) p.parts.push_back(pool[chosen[v]]);
      out.push_back(std::move(p));
      return;
    }
    const int v = order[k];
    std::array<std::optional<Weight>, 3> required;
    std::array<int, 3> loop_partner{-1, -1, -1};
    for (int s = 0; s < 3; ++s) {
      const SlotUse& use = g.slot_use(v, s);
      if (use.kind == SlotUse::Leaf) {
        if (leaves) required[s] = (*leaves)[use.index];
        continue;
      }
      const HalfEdge other = g.opposite({v, s});
      if (other.vertex == v) {
        loop_partner[s] = other.slot;
      } else if (chosen[other.vertex] >= 0) {
        required[s] = dual(pool_boundary[chosen[other.vertex]][other.slot]);
      }
    }
    const std::vector<int>* candidates = &all_indices;
    static const std::vector<int> kEmpty;
    for (int s = 0; s < 3; ++s) {
      if (!required[s]) continue;
      auto it = by_slot[s].find(*required[s]);
      const std::vector<int>* list = it == by_slot[s].end() ? &kEmpty : &it->second;
      if (list->size() < candidates->size()) candidates = list;
    }
    for (int i : *candidates) {
      const Boundary& b = pool_boundary[i];
      bool ok = true;
      for (int s = 0; s < 3 && ok; ++s) {
        if (required[s] && b[s] != *required[s]) ok = false;
        if (loop_partner[s] >= 0 && b[s] != dual(b[loop_partner[s]])) ok = false;
      }
      if (!ok) continue;
      chosen[v] = i;
      visit(k + 1);
      chosen[v] = -1;
    }
  };
  visit(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> hilbert_function(const TrivalentGraph& g, int max_level) {
  std::vector<long> h;
  for (int level = 0; level <= max_level; ++level) {
    h.push_back(g.genus() == 0 ? sum_product_tree(g, std::nullopt, level)
                               : sum_product(g, std::nullopt, level));
  }
  return h;
}

MultigradedTable multigraded_table(const TrivalentGraph& g, int level, int max_weight_level) {
  const std::vector<Weight> weights = admissible_weights(max_weight_level);
  const int n = g.leaf_count();
  const long tuples = tuple_count(static_cast<int>(weights.size()), n);
  std::vector<std::pair<LeafWeights, long>> found;
#pragma omp parallel
  {
    std::vector<std::pair<LeafWeights, long>> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long flat = 0; flat < tuples; ++flat) {
      LeafWeights lw(n);
      long rest = flat;
      int triality = 0;
      for (int i = 0; i < n; ++i) {
        lw[i] = weights[rest % weights.size()];
        rest /= static_cast<long>(weights.size());
        triality += lw[i].a + 2 * lw[i].b;
      }
      // Invariants need the total weight in the root lattice.
      if (triality % 3 != 0) continue;
      const long d = g.genus() == 0 ? sum_product_tree(g, lw, level) : sum_product_serial(g, lw, level);
      if (d != 0) local.emplace_back(std::move(lw), d);
    }
#pragma omp critical
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
  return MultigradedTable(found.begin(), found.end());
}

std::vector<GlobalPoint> degree_one_elements(const TrivalentGraph& tree) {
  const int v_count = tree.vertex_count();
  std::vector<GlobalPoint> out;
  out.push_back(GlobalPoint{std::vector<LocalPoint>(v_count, generator_point(X)), 1});

  for (const ProperForest& f : proper_forests(tree)) {
    // Chosen slots per vertex.
    std::vector<std::vector<int>> chosen_slots(v_count);
    for (int v = 0; v < v_count; ++v) {
      for (int s = 0; s < 3; ++s) {
        const SlotUse& use = tree.slot_use(v, s);
        const bool in = use.kind == SlotUse::Leaf ? f.leaves[use.index] : f.internal_edges[use.index];
        if (in) chosen_slots[v].push_back(s);
      }
    }
    // Component roots in vertex order; each gets two orientations.
    std::vector<int> roots;
    std::vector<int> component(v_count, -1);
    for (int v = 0; v < v_count; ++v) {
      if (f.degree[v] == 0 || component[v] >= 0) continue;
      const int c = static_cast<int>(roots.size());
      roots.push_back(v);
      std::vector<int> stack{v};
      component[v] = c;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int s : chosen_slots[u]) {
          if (tree.slot_use(u, s).kind != SlotUse::EdgeEnd) continue;
          const int w = tree.opposite({u, s}).vertex;
          if (component[w] < 0) {
            component[w] = c;
            stack.push_back(w);
          }
        }
      }
    }

    // Generator at u given the weight required at one of its chosen slots.
    auto generator_for = [&](int u, int slot, Weight w) {
      if (chosen_slots[u].size() == 3) return w == Weight{1, 0} ? S : T;
      const int other = chosen_slots[u][0] == slot ? chosen_slots[u][1] : chosen_slots[u][0];
      return w == Weight{1, 0} ? path_generator(slot, other) : path_generator(other, slot);
    };

    const int comps = static_cast<int>(roots.size());
    for (int mask = 0; mask < (1 << comps); ++mask) {
      std::vector<Gen> gens(v_count, X);
      for (int c = 0; c < comps; ++c) {
        const int r = roots[c];
        const Weight start = (mask >> c & 1) ? Weight{0, 1} : Weight{1, 0};
        gens[r] = generator_for(r, chosen_slots[r][0], start);
        std::vector<int> stack{r};
        std::vector<bool> done(v_count, false);
        done[r] = true;
        while (!stack.empty()) {
          const int u = stack.back();
          stack.pop_back();
          const Boundary b = generator_boundary(gens[u]);
          for (int s : chosen_slots[u]) {
            if (tree.slot_use(u, s).kind != SlotUse::EdgeEnd) continue;
            const HalfEdge h = tree.opposite({u, s});
            if (done[h.vertex]) continue;
            done[h.vertex] = true;
            gens[h.vertex] = generator_for(h.vertex, h.slot, dual(b[s]));
            stack.push_back(h.vertex);
          }
        }
      }
      GlobalPoint p{{}, 1};
      for (int v = 0; v < v_count; ++v) p.parts.push_back(generator_point(gens[v]));
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sl3cb
