#include "sl3cb/graphs.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sl3cb {

namespace {

std::string describe(HalfEdge h, const std::vector<int>& ids) {
  return "(" + std::to_string(ids.at(h.vertex)) + "," + std::to_string(h.slot + 1) + ")";
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(what) + ": expected an integer, got '" +
                                std::string(text) + "'");
  }
  return value;
}

// A leg of a spine: either a leaf (label assigned in order) or a looped vertex.
enum class Leg { Leaf, Loop };

TrivalentGraph spine_with_legs(const std::vector<Leg>& legs, std::string name) {
  const int m = static_cast<int>(legs.size());
  std::vector<std::pair<HalfEdge, HalfEdge>> edges;
  std::vector<HalfEdge> leaf_slots;
  int vertices = 0;

  auto attach = [&](HalfEdge at, Leg leg) {
    if (leg == Leg::Leaf) {
      leaf_slots.push_back(at);
      return;
    }
    const int v = vertices++;
    edges.push_back({{v, 0}, {v, 1}});
    edges.push_back({at, {v, 2}});
  };

  if (m == 2) {
    // No spine: the two legs meet directly.
    if (legs[0] == Leg::Loop && legs[1] == Leg::Leaf) {
      vertices = 1;
      edges.push_back({{0, 0}, {0, 1}});
      leaf_slots.push_back({0, 2});
    } else if (legs[0] == Leg::Loop && legs[1] == Leg::Loop) {
      vertices = 2;
      edges.push_back({{0, 0}, {0, 1}});
      edges.push_back({{1, 0}, {1, 1}});
      edges.push_back({{0, 2}, {1, 2}});
    } else {
      throw std::invalid_argument("two leaves cannot be joined at a trivalent vertex");
    }
  } else {
    const int spine = m - 2;
    vertices = spine;
    for (int i = 0; i + 1 < spine; ++i) edges.push_back({{i, 2}, {i + 1, 0}});
    attach({0, 0}, legs[0]);
    attach({0, 1}, legs[1]);
    for (int i = 1; i + 1 < spine; ++i) attach({i, 1}, legs[i + 1]);
    if (spine == 1) {
      attach({0, 2}, legs[2]);
    } else {
      attach({spine - 1, 1}, legs[m - 2]);
      attach({spine - 1, 2}, legs[m - 1]);
    }
  }
  std::vector<int> ids(vertices);
  std::iota(ids.begin(), ids.end(), 0);
  return TrivalentGraph(std::move(ids), std::move(edges), std::move(leaf_slots), std::move(name));
}

TrivalentGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("graph JSON: expected an object");
  for (const char* key : {"internal", "edges", "leaves"}) {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("graph JSON: missing \"") + key + "\"");
  }
  const auto& internal = doc["internal"];
  if (!internal.is_array()) throw std::invalid_argument("graph JSON: \"internal\" must be an array");
  std::vector<int> ids;
  std::map<int, int> position;
  for (std::size_t i = 0; i < internal.size(); ++i) {
    if (!internal[i].is_number_integer()) {
      throw std::invalid_argument("internal[" + std::to_string(i) + "]: expected an integer id");
    }
    const int id = internal[i].get<int>();
    if (!position.emplace(id, static_cast<int>(ids.size())).second) {
      throw std::invalid_argument("internal[" + std::to_string(i) + "]: duplicate id " + std::to_string(id));
    }
    ids.push_back(id);
  }

  auto half_edge = [&](const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
      throw std::invalid_argument(where + ": expected [vertex, slot]");
    }
    auto it = position.find(j[0].get<int>());
    if (it == position.end()) {
      throw std::invalid_argument(where + ": unknown vertex " + std::to_string(j[0].get<int>()));
    }
    const int slot = j[1].get<int>();
    if (slot < 1 || slot > 3) {
      throw std::invalid_argument(where + ": slot " + std::to_string(slot) + " outside 1..3");
    }
    return HalfEdge{it->second, slot - 1};
  };

  const auto& edge_list = doc["edges"];
  if (!edge_list.is_array()) throw std::invalid_argument("graph JSON: \"edges\" must be an array");
  std::vector<std::pair<HalfEdge, HalfEdge>> edges;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edge_list[i].is_array() || edge_list[i].size() != 2) {
      throw std::invalid_argument(where + ": expected a pair of half-edges");
    }
    edges.emplace_back(half_edge(edge_list[i][0], where + "[0]"), half_edge(edge_list[i][1], where + "[1]"));
  }

  const auto& leaf_map = doc["leaves"];
  if (!leaf_map.is_object()) throw std::invalid_argument("graph JSON: \"leaves\" must be an object");
  std::map<int, HalfEdge> labelled;
  for (const auto& [key, value] : leaf_map.items()) {
    const int label = parse_int(key, "leaves label");
    labelled[label] = half_edge(value, "leaves[\"" + key + "\"]");
  }
  std::vector<HalfEdge> leaves;
  int expected = 1;
  for (const auto& [label, h] : labelled) {
    if (label != expected) {
      throw std::invalid_argument("leaves: labels must be 1.." + std::to_string(labelled.size()) +
                                  ", missing " + std::to_string(expected));
    }
    leaves.push_back(h);
    ++expected;
  }
  return TrivalentGraph(std::move(ids), std::move(edges), std::move(leaves), "json");
}

}  // namespace

TrivalentGraph::TrivalentGraph(std::vector<int> vertex_ids,
                               std::vector<std::pair<HalfEdge, HalfEdge>> edges,
                               std::vector<HalfEdge> leaves, std::string name)
    : vertex_ids_(std::move(vertex_ids)),
      edges_(std::move(edges)),
      leaves_(std::move(leaves)),
      name_(std::move(name)) {
  const int v_count = vertex_count();
  if (v_count == 0) throw std::invalid_argument("graph has no internal vertices");

  std::vector<std::array<int, 3>> used(v_count, {0, 0, 0});
  slots_.assign(v_count, {});
  auto claim = [&](HalfEdge h, SlotUse use) {
    if (h.vertex < 0 || h.vertex >= v_count || h.slot < 0 || h.slot > 2) {
      throw std::invalid_argument("half-edge refers to a missing vertex or slot");
    }
    if (used[h.vertex][h.slot]++ > 0) {
      throw std::invalid_argument("half-edge " + describe(h, vertex_ids_) + " is used twice");
    }
    slots_[h.vertex][h.slot] = use;
  };
  for (int e = 0; e < edge_count(); ++e) {
    claim(edges_[e].first, {SlotUse::EdgeEnd, e, 0});
    claim(edges_[e].second, {SlotUse::EdgeEnd, e, 1});
  }
  for (int l = 0; l < leaf_count(); ++l) claim(leaves_[l], {SlotUse::Leaf, l, 0});
  for (int v = 0; v < v_count; ++v) {
    const int degree = used[v][0] + used[v][1] + used[v][2];
    if (degree != 3) {
      throw std::invalid_argument("vertex " + std::to_string(vertex_ids_[v]) + " has degree " +
                                  std::to_string(degree) + ", expected 3");
    }
  }

  std::vector<int> parent(v_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [h1, h2] : edges_) parent[find_root(parent, h1.vertex)] = find_root(parent, h2.vertex);
  for (int v = 1; v < v_count; ++v) {
    if (find_root(parent, v) != find_root(parent, 0)) {
      throw std::invalid_argument("graph is disconnected: vertex " + std::to_string(vertex_ids_[v]) +
                                  " is not reachable from vertex " + std::to_string(vertex_ids_[0]));
    }
  }
}

HalfEdge TrivalentGraph::opposite(HalfEdge h) const {
  const SlotUse& use = slots_.at(h.vertex).at(h.slot);
  if (use.kind != SlotUse::EdgeEnd) throw std::invalid_argument("opposite: half-edge is a leaf");
  return use.end == 0 ? edges_[use.index].second : edges_[use.index].first;
}

int genus(const TrivalentGraph& g) { return g.genus(); }

TrivalentGraph caterpillar(int leaves) {
  if (leaves < 3) throw std::invalid_argument("caterpillar needs at least 3 leaves");
  return spine_with_legs(std::vector<Leg>(leaves, Leg::Leaf), "caterpillar:" + std::to_string(leaves));
}

TrivalentGraph gamma_graph(int loops, int leaves) {
  if (loops < 0 || leaves < 0) throw std::invalid_argument("gamma: counts must be non-negative");
  if (loops + leaves < 2 || (loops == 0 && leaves < 3)) {
    throw std::invalid_argument("gamma:" + std::to_string(loops) + "," + std::to_string(leaves) +
                                " has no trivalent realization");
  }
  std::vector<Leg> legs(loops, Leg::Loop);
  legs.insert(legs.end(), leaves, Leg::Leaf);
  return spine_with_legs(legs, "gamma:" + std::to_string(loops) + "," + std::to_string(leaves));
}

TrivalentGraph dumbbell() {
  auto g = gamma_graph(2, 0);
  return TrivalentGraph(g.vertex_ids(), g.edges(), g.leaves(), "dumbbell");
}

TrivalentGraph theta() {
  return TrivalentGraph({0, 1}, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}, {}, "theta");
}

TrivalentGraph parse_graph(std::string_view spec) {
  auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && spec[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(doc);
  }
  if (spec == "dumbbell") return dumbbell();
  if (spec == "theta") return theta();
  if (spec.starts_with("caterpillar:")) {
    return caterpillar(parse_int(spec.substr(12), "caterpillar leaf count"));
  }
  if (spec.starts_with("gamma:")) {
    auto rest = spec.substr(6);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("gamma: expected gamma:g,n");
    return gamma_graph(parse_int(rest.substr(0, comma), "gamma loop count"),
                       parse_int(rest.substr(comma + 1), "gamma leaf count"));
  }
  throw std::invalid_argument("unknown graph '" + std::string(spec) +
                              "': expected caterpillar:n, gamma:g,n, dumbbell, theta or JSON");
}

TrivalentGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

TrinodeForest split_to_trinodes(const TrivalentGraph& g) {
  return {g.vertex_count(), g.edges(), g.leaves()};
}

std::vector<ProperForest> proper_forests(const TrivalentGraph& tree) {
  if (tree.genus() != 0) throw std::invalid_argument("proper_forests: graph is not a tree");
  const int e_count = tree.edge_count();
  const int n = tree.leaf_count();
  const int total = e_count + n;
  if (total > 30) throw std::invalid_argument("proper_forests: tree too large to enumerate");

  std::vector<ProperForest> out;
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    ProperForest f;
    f.internal_edges.assign(e_count, false);
    f.leaves.assign(n, false);
    f.degree.assign(tree.vertex_count(), 0);
    std::vector<int> parent(tree.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < e_count; ++e) {
      if (!(mask >> e & 1u)) continue;
      f.internal_edges[e] = true;
      const auto& [h1, h2] = tree.edges()[e];
      f.degree[h1.vertex]++;
      f.degree[h2.vertex]++;
      parent[find_root(parent, h1.vertex)] = find_root(parent, h2.vertex);
    }
    for (int l = 0; l < n; ++l) {
      if (!(mask >> (e_count + l) & 1u)) continue;
      f.leaves[l] = true;
      f.degree[tree.leaves()[l].vertex]++;
    }
    bool ok = true;
    for (int d : f.degree) ok = ok && d != 1;
    if (!ok) continue;
    for (int v = 0; v < tree.vertex_count(); ++v) {
      if (f.degree[v] > 0 && find_root(parent, v) == v) ++f.components;
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace sl3cb
