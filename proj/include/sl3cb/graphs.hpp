#pragma once

// Trivalent graphs with labelled leaves. Internal vertices are renumbered
// 0..V-1 in a deterministic order; slots are 0-based internally and 1-based in
// every external format.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sl3cb {

struct HalfEdge {
  int vertex = 0;
  int slot = 0;

  auto operator<=>(const HalfEdge&) const = default;
};

/// What sits at one vertex slot.
struct SlotUse {
  enum Kind { Leaf, EdgeEnd } kind = Leaf;
  /// Leaf: 0-based leaf index. EdgeEnd: edge index.
  int index = 0;
  /// EdgeEnd only: 0 for the first half-edge of the edge, 1 for the second.
  int end = 0;
};

class TrivalentGraph {
 public:
  /// Validates and takes ownership. `vertex_ids` are the caller's names for
  /// the vertices; edges and leaves refer to positions in that vector.
  /// Throws std::invalid_argument naming the offending vertex or slot.
  TrivalentGraph(std::vector<int> vertex_ids, std::vector<std::pair<HalfEdge, HalfEdge>> edges,
                 std::vector<HalfEdge> leaves, std::string name = {});

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int leaf_count() const { return static_cast<int>(leaves_.size()); }

  const std::vector<int>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::pair<HalfEdge, HalfEdge>>& edges() const { return edges_; }
  const std::vector<HalfEdge>& leaves() const { return leaves_; }
  const SlotUse& slot_use(int vertex, int slot) const { return slots_[vertex][slot]; }
  const std::string& name() const { return name_; }

  /// The half-edge across the edge from h; h must be an edge end.
  HalfEdge opposite(HalfEdge h) const;

  int genus() const { return edge_count() - vertex_count() + 1; }

 private:
  std::vector<int> vertex_ids_;
  std::vector<std::pair<HalfEdge, HalfEdge>> edges_;
  std::vector<HalfEdge> leaves_;
  std::vector<std::array<SlotUse, 3>> slots_;
  std::string name_;
};

int genus(const TrivalentGraph& g);

/// Builder shorthand ("caterpillar:n", "gamma:g,n", "dumbbell", "theta") or a
/// JSON document {"internal":[...],"edges":[[[v,s],[w,s]],...],"leaves":{"1":[v,s],...}}.
TrivalentGraph parse_graph(std::string_view spec);
TrivalentGraph parse_graph_file(const std::string& path);

TrivalentGraph caterpillar(int leaves);
/// g looped vertices hanging off a spine, then n leaves. gamma(1,1) is a
/// single vertex with a loop; gamma(2,0) is the dumbbell.
TrivalentGraph gamma_graph(int loops, int leaves);
TrivalentGraph dumbbell();
TrivalentGraph theta();

/// The graph cut at every edge: one trinode per vertex plus the slot pairings.
struct TrinodeForest {
  int trinodes = 0;
  std::vector<std::pair<HalfEdge, HalfEdge>> matched;
  std::vector<HalfEdge> leaves;
};

TrinodeForest split_to_trinodes(const TrivalentGraph& g);

/// A proper forest of a tree: chosen internal edges plus chosen leaves, with
/// every vertex touched 0, 2 or 3 times.
struct ProperForest {
  std::vector<bool> internal_edges;
  std::vector<bool> leaves;
  /// Per vertex: number of chosen edges at it (0, 2 or 3).
  std::vector<int> degree;
  int components = 0;
};

/// All proper forests of a tree, in increasing order of the chosen-edge bitmask.
/// Throws std::invalid_argument if the graph is not a tree.
std::vector<ProperForest> proper_forests(const TrivalentGraph& tree);

}  // namespace sl3cb
