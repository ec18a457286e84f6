#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sct/simplex.hpp"

namespace sct {

// Undirected edge, stored with the smaller endpoint first.
using GraphEdge = std::pair<VertexId, VertexId>;

inline GraphEdge make_edge(VertexId a, VertexId b) {
  if (a == b)
    throw Error(errc::invalid_argument,
                "loop edge at " + std::to_string(a));
  return a < b ? GraphEdge{a, b} : GraphEdge{b, a};
}

// Finite simple graph. Node labels reuse the VertexId space of the complex
// the graph was extracted from; the apex label below never collides because
// complex vertices are non-negative.
inline constexpr VertexId apex_node = -1;

class Graph {
 public:
  void add_vertex(VertexId v) { vertices_.insert(v); }

  void add_edge(VertexId a, VertexId b) {
    GraphEdge e = make_edge(a, b);
    vertices_.insert(e.first);
    vertices_.insert(e.second);
    edges_.insert(e);
  }

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::set<GraphEdge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
  bool has_edge(const GraphEdge& e) const { return edges_.count(e) > 0; }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const GraphEdge& e : edges_) {
      if (e.first == v) out.push_back(e.second);
      if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool operator==(const Graph&) const = default;

 private:
  std::set<VertexId> vertices_;
  std::set<GraphEdge> edges_;
};

// Adds one fresh apex node adjacent to every terminal. With terminals empty
// this is the identity on edges plus an isolated apex.
inline Graph augment_with_apex(const Graph& g,
                               const std::set<VertexId>& terminals) {
  if (g.has_vertex(apex_node))
    throw Error(errc::invalid_argument, "apex label already in graph");
  for (VertexId n : terminals)
    if (!g.has_vertex(n))
      throw Error(errc::unknown_vertex,
                  "terminal " + std::to_string(n) + " not in graph");
  Graph out = g;
  out.add_vertex(apex_node);
  for (VertexId n : terminals) out.add_edge(apex_node, n);
  return out;
}

// Edges lying on no cycle, by one depth-first traversal with low-link
// values. Simple graphs only, so skipping the parent vertex is sound.
inline std::set<GraphEdge> bridges(const Graph& g) {
  std::map<VertexId, int> disc, low;
  std::set<GraphEdge> out;
  int timer = 0;
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
    disc[v] = low[v] = ++timer;
    for (VertexId w : g.neighbors(v)) {
      if (w == parent) continue;
      auto seen = disc.find(w);
      if (seen != disc.end()) {
        low[v] = std::min(low[v], seen->second);
        continue;
      }
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (low[w] > disc[v]) out.insert(make_edge(v, w));
    }
  };
  for (VertexId v : g.vertices())
    if (!disc.count(v)) dfs(v, v);
  return out;
}

// True iff e lies on a cycle of g or on a simple path whose two distinct
// endpoints are both terminals. A cycle through the apex of the augmented
// graph corresponds exactly to a terminal-terminal path, and a cycle
// avoiding the apex is a cycle of g, so the test reduces to non-bridgeness.
inline bool edge_passes(const Graph& g, const std::set<VertexId>& terminals,
                        const GraphEdge& e) {
  if (!g.has_edge(e))
    throw Error(errc::invalid_argument, "edge not in graph");
  return bridges(augment_with_apex(g, terminals)).count(e) == 0;
}

// Connected component of start, optionally with one edge removed.
inline std::set<VertexId> component_of(
    const Graph& g, VertexId start,
    const std::optional<GraphEdge>& removed = std::nullopt) {
  std::set<VertexId> seen{start};
  std::vector<VertexId> queue{start};
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (removed && *removed == make_edge(v, w)) continue;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

inline std::vector<std::set<VertexId>> connected_components(const Graph& g) {
  std::vector<std::set<VertexId>> out;
  std::set<VertexId> seen;
  for (VertexId v : g.vertices()) {
    if (seen.count(v)) continue;
    out.push_back(component_of(g, v));
    seen.insert(out.back().begin(), out.back().end());
  }
  return out;
}

// Breadth-first path between two nodes, optionally avoiding one edge.
// Neighbor order is sorted, so the result is deterministic.
inline std::optional<std::vector<VertexId>> shortest_path(
    const Graph& g, VertexId from, VertexId to,
    const std::optional<GraphEdge>& removed = std::nullopt) {
  std::map<VertexId, VertexId> parent;
  parent[from] = from;
  std::vector<VertexId> frontier{from};
  while (!frontier.empty() && !parent.count(to)) {
    std::vector<VertexId> next;
    for (VertexId v : frontier) {
      for (VertexId w : g.neighbors(v)) {
        if (removed && *removed == make_edge(v, w)) continue;
        if (parent.count(w)) continue;
        parent[w] = v;
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  if (!parent.count(to)) return std::nullopt;
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Cycle rank (first Betti number) of the graph: E - V + #components.
inline std::size_t cycle_rank(const Graph& g) {
  return g.edges().size() + connected_components(g).size() -
         g.vertices().size();
}

}  // namespace sct
