#pragma once

#include <set>

#include "sct/graph.hpp"
#include "sct/pair.hpp"

namespace sct {

// The combinatorial form of the local cone pair at a vertex: the link of
// the vertex in X as a graph, the vertices of its link in A as the terminal
// set, and whether the cone tip itself belongs to A.
struct MarkedLink {
  VertexId origin = -1;
  Graph link;
  std::set<VertexId> terminals;
  bool tip_in_marked = false;

  bool operator==(const MarkedLink&) const = default;
};

// Requires the star of v to be at most 2-dimensional (so the link is a
// graph) and the link of v in A to carry no edge (guaranteed whenever the
// pair is applicable).
inline MarkedLink extract_marked_link(const Pair& p, VertexId v) {
  if (!p.X().has_vertex(v))
    throw Error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
  for (const Simplex& s : p.X().simplices())
    if (s.contains(v) && s.dimension() >= 3)
      throw Error(errc::dimension_unsupported,
                  "star of vertex " + std::to_string(v) +
                      " has dimension >= 3");

  MarkedLink out;
  out.origin = v;
  const Complex link_x = link(p.X(), v);
  for (const Simplex& s : link_x.simplices()) {
    if (s.dimension() == 0)
      out.link.add_vertex(s.vertices()[0]);
    else
      out.link.add_edge(s.vertices()[0], s.vertices()[1]);
  }
  if (p.A().has_vertex(v)) {
    out.tip_in_marked = true;
    const Complex link_a = link(p.A(), v);
    for (const Simplex& s : link_a.simplices()) {
      if (s.dimension() >= 1)
        throw Error(errc::interior_violation,
                    "link of vertex " + std::to_string(v) +
                        " in A contains an edge");
      out.terminals.insert(s.vertices()[0]);
    }
  }
  return out;
}

}  // namespace sct
