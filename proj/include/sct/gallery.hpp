#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sct/decision.hpp"

namespace sct {

struct GalleryExpectation {
  Outcome verdict = Outcome::computable_type;
  std::optional<long long> euler;
  // When set, boundary(X, one) must be empty / non-empty accordingly.
  std::optional<bool> no_free_simplices;
};

struct NamedPair {
  std::string name;
  Pair pair;
  std::string provenance;
  GalleryExpectation expected;
};

namespace gallery_detail {

inline Simplex seg(VertexId a, VertexId b) { return Simplex{a, b}; }
inline Simplex tri(VertexId a, VertexId b, VertexId c) {
  return Simplex{a, b, c};
}

inline Simplex range_simplex(int n) {
  std::vector<VertexId> vs(n + 1);
  for (int i = 0; i <= n; ++i) vs[i] = i;
  return Simplex(std::move(vs));
}

inline NamedPair make_simplex(int n) {
  if (n < 0) throw Error(errc::invalid_argument, "simplex(n) needs n >= 0");
  NamedPair np;
  np.name = "simplex(" + std::to_string(n) + ")";
  np.pair = Pair(closure({range_simplex(n)}), Complex());
  np.provenance = "solid " + std::to_string(n) + "-simplex, empty A";
  np.expected.euler = 1;
  np.expected.verdict = n == 0   ? Outcome::computable_type
                        : n <= 2 ? Outcome::not_computable_type
                                 : Outcome::inapplicable;
  return np;
}

inline NamedPair make_sphere(int n) {
  if (n < 0) throw Error(errc::invalid_argument, "sphere(n) needs n >= 0");
  Simplex full = range_simplex(n + 1);
  std::set<Simplex> facets;
  for (VertexId v : full.vertices()) facets.insert(full.without_vertex(v));
  NamedPair np;
  np.name = "sphere(" + std::to_string(n) + ")";
  np.pair = Pair(closure(facets), Complex());
  np.provenance =
      "boundary of the " + std::to_string(n + 1) + "-simplex, empty A";
  np.expected.euler = 1 + (n % 2 == 0 ? 1 : -1);
  np.expected.verdict =
      n <= 2 ? Outcome::computable_type : Outcome::inapplicable;
  return np;
}

inline NamedPair make_ball_pair(int n) {
  if (n < 0 || n > 2)
    throw Error(errc::invalid_argument, "ball_pair(n) needs 0 <= n <= 2");
  Complex x = closure({range_simplex(n)});
  NamedPair np;
  np.name = "ball_pair(" + std::to_string(n) + ")";
  np.pair = Pair(x, boundary(x, BoundaryKind::plus));
  np.provenance =
      std::to_string(n) + "-ball with its bounding sphere as A";
  np.expected.euler = 1;
  np.expected.verdict = Outcome::computable_type;
  return np;
}

inline NamedPair make_star(int n) {
  if (n < 1) throw Error(errc::invalid_argument, "star(n) needs n >= 1");
  std::set<Simplex> x_gens, a_gens;
  for (int i = 1; i <= n; ++i) x_gens.insert(seg(0, i));
  if (n == 1) {
    a_gens.insert(Simplex{0});
    a_gens.insert(Simplex{1});
  } else {
    for (int i = 1; i <= n; ++i) a_gens.insert(Simplex{i});
  }
  NamedPair np;
  np.name = "star(" + std::to_string(n) + ")";
  np.pair = Pair::from_generators(x_gens, a_gens);
  np.provenance = "star with " + std::to_string(n) +
                  " branches; A holds the degree-1 endpoints";
  np.expected.euler = 1;
  np.expected.verdict = Outcome::computable_type;
  return np;
}

inline NamedPair make_n_squares(int n) {
  if (n < 2)
    throw Error(errc::invalid_argument, "n_squares(n) needs n >= 2");
  // One shared edge c0-c1, each square triangulated from the midpoint m of
  // that edge; m = 0, c0 = 1, c1 = 2.
  std::set<Simplex> x_gens, a_gens;
  for (int i = 1; i <= n; ++i) {
    VertexId a = 2 * i + 1, b = 2 * i + 2;
    x_gens.insert(tri(0, 1, a));
    x_gens.insert(tri(0, a, b));
    x_gens.insert(tri(0, b, 2));
    a_gens.insert(seg(1, a));
    a_gens.insert(seg(a, b));
    a_gens.insert(seg(b, 2));
  }
  NamedPair np;
  np.name = "n_squares(" + std::to_string(n) + ")";
  np.pair = Pair::from_generators(x_gens, a_gens);
  np.provenance = std::to_string(n) +
                  " squares meeting in one common edge; A holds the other "
                  "edges";
  np.expected.euler = 1;
  np.expected.verdict = Outcome::computable_type;
  return np;
}

// Dunce hat: a solid triangle with its three sides identified, one side
// reversed. Model: the perimeter is the 3-subdivided triangle boundary
// (so the identified edge is the loop 0-1-2-0), an inner 9-ring 3..11
// between perimeter and center 12 keeps every identified face embedded.
inline std::set<Simplex> dunce_hat_triangles() {
  const VertexId perimeter[9] = {0, 1, 2, 0, 1, 2, 0, 2, 1};
  const VertexId center = 12;
  std::set<Simplex> gens;
  for (int t = 0; t < 9; ++t) {
    VertexId o0 = perimeter[t];
    VertexId o1 = perimeter[(t + 1) % 9];
    VertexId u0 = 3 + t;
    VertexId u1 = 3 + (t + 1) % 9;
    gens.insert(tri(o0, o1, u0));
    gens.insert(tri(o1, u0, u1));
    gens.insert(tri(u0, u1, center));
  }
  return gens;
}

inline NamedPair make_dunce_hat(bool with_identified_edge) {
  NamedPair np;
  std::set<Simplex> a_gens;
  if (with_identified_edge) {
    a_gens = {seg(0, 1), seg(1, 2), seg(0, 2)};
    np.name = "dunce_hat_with_A";
    np.provenance = "Zeeman's dunce hat with the identified edge as A";
    np.expected.verdict = Outcome::computable_type;
  } else {
    np.name = "dunce_hat";
    np.provenance =
        "Zeeman's dunce hat: a solid triangle with all three sides "
        "identified, one reversed";
    np.expected.verdict = Outcome::not_computable_type;
  }
  np.pair = Pair::from_generators(dunce_hat_triangles(), a_gens);
  np.expected.euler = 1;
  np.expected.no_free_simplices = true;
  return np;
}

// Bing's house with two rooms on a 5 x 4 x 2 grid. The chimney of the
// upper room sits over cell (1,1) and is tied to the wall x=0 by a panel;
// the tunnel of the lower room sits over cell (3,2) and is tied to the
// wall x=5. Unit squares are split along the diagonal from their smallest
// corner id.
inline std::set<Simplex> bing_house_triangles() {
  auto id = [](int x, int y, int z) { return x + 6 * y + 30 * z; };
  std::set<Simplex> gens;
  auto add_square = [&](VertexId p00, VertexId p10, VertexId p01,
                        VertexId p11) {
    gens.insert(tri(p00, p10, p11));
    gens.insert(tri(p00, p01, p11));
  };
  auto horizontal = [&](int cx, int cy, int z) {
    add_square(id(cx, cy, z), id(cx + 1, cy, z), id(cx, cy + 1, z),
               id(cx + 1, cy + 1, z));
  };
  auto wall_x = [&](int x, int cy, int cz) {
    add_square(id(x, cy, cz), id(x, cy + 1, cz), id(x, cy, cz + 1),
               id(x, cy + 1, cz + 1));
  };
  auto wall_y = [&](int cx, int y, int cz) {
    add_square(id(cx, y, cz), id(cx + 1, y, cz), id(cx, y, cz + 1),
               id(cx + 1, y, cz + 1));
  };

  for (int cx = 0; cx < 5; ++cx) {
    for (int cy = 0; cy < 4; ++cy) {
      if (!(cx == 3 && cy == 2)) horizontal(cx, cy, 0);          // floor
      if (!(cx == 1 && cy == 1) && !(cx == 3 && cy == 2))
        horizontal(cx, cy, 1);                                   // middle
      if (!(cx == 1 && cy == 1)) horizontal(cx, cy, 2);          // roof
    }
  }
  for (int cy = 0; cy < 4; ++cy)
    for (int cz = 0; cz < 2; ++cz) {
      wall_x(0, cy, cz);
      wall_x(5, cy, cz);
    }
  for (int cx = 0; cx < 5; ++cx)
    for (int cz = 0; cz < 2; ++cz) {
      wall_y(cx, 0, cz);
      wall_y(cx, 4, cz);
    }
  // chimney walls, z in [1,2]
  wall_x(1, 1, 1);
  wall_x(2, 1, 1);
  wall_y(1, 1, 1);
  wall_y(1, 2, 1);
  // tunnel walls, z in [0,1]
  wall_x(3, 2, 0);
  wall_x(4, 2, 0);
  wall_y(3, 2, 0);
  wall_y(3, 3, 0);
  // panels tying each tube to a side wall
  wall_y(0, 1, 1);
  wall_y(4, 3, 0);
  return gens;
}

inline NamedPair make_bing_house() {
  NamedPair np;
  np.name = "bing_house";
  np.provenance = "Bing's house with two rooms";
  np.pair = Pair::from_generators(bing_house_triangles(), {});
  np.expected.euler = 1;
  np.expected.no_free_simplices = true;
  np.expected.verdict = Outcome::computable_type;
  return np;
}

inline NamedPair make_mobius(bool with_boundary) {
  std::set<Simplex> x_gens = {tri(0, 1, 2), tri(1, 2, 3), tri(2, 3, 4),
                              tri(3, 4, 0), tri(4, 0, 1)};
  std::set<Simplex> a_gens;
  if (with_boundary)
    a_gens = {seg(0, 2), seg(2, 4), seg(1, 4), seg(1, 3), seg(0, 3)};
  NamedPair np;
  np.name = with_boundary ? "mobius_pair" : "mobius_bare";
  np.provenance = with_boundary
                      ? "Moebius strip with its boundary circle as A"
                      : "Moebius strip with empty A";
  np.pair = Pair::from_generators(x_gens, a_gens);
  np.expected.euler = 0;
  np.expected.verdict = with_boundary ? Outcome::computable_type
                                      : Outcome::not_computable_type;
  return np;
}

inline NamedPair make_torus() {
  std::set<Simplex> gens;
  for (int i = 0; i < 7; ++i) {
    gens.insert(tri(i, (i + 1) % 7, (i + 3) % 7));
    gens.insert(tri(i, (i + 2) % 7, (i + 3) % 7));
  }
  NamedPair np;
  np.name = "torus";
  np.provenance = "7-vertex torus (Csaszar triangulation), empty A";
  np.pair = Pair::from_generators(gens, {});
  np.expected.euler = 0;
  np.expected.no_free_simplices = true;
  np.expected.verdict = Outcome::computable_type;
  return np;
}

// Cylinder over the graph made of two triangles joined by an edge, with
// both bases as A. Level-1 copies live at id + 6.
inline NamedPair make_cylinder_theta_pair() {
  std::vector<GraphEdge> base_edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4},
                                       {3, 5}, {4, 5}, {0, 3}};
  std::set<Simplex> x_gens, a_gens;
  for (auto [p, q] : base_edges) {
    x_gens.insert(tri(p, q, q + 6));
    x_gens.insert(tri(p, p + 6, q + 6));
    a_gens.insert(seg(p, q));
    a_gens.insert(seg(p + 6, q + 6));
  }
  NamedPair np;
  np.name = "cylinder_theta_pair";
  np.provenance =
      "cylinder over two circles joined by a segment; A holds both bases";
  np.pair = Pair::from_generators(x_gens, a_gens);
  np.expected.euler = -1;
  np.expected.verdict = Outcome::computable_type;
  return np;
}

inline NamedPair make_segment_bare() {
  NamedPair np;
  np.name = "segment_bare";
  np.provenance = "line segment with empty A";
  np.pair = Pair::from_generators({seg(0, 1)}, {});
  np.expected.euler = 1;
  np.expected.verdict = Outcome::not_computable_type;
  return np;
}

}  // namespace gallery_detail

// Graph pair (G, A) with A defaulting to the degree-1 vertices.
inline NamedPair make_graph_pair(
    int vertex_count, const std::vector<std::pair<int, int>>& edges,
    std::optional<std::set<VertexId>> a_vertices = std::nullopt,
    const std::string& name = "graph") {
  if (vertex_count < 1)
    throw Error(errc::invalid_argument, "graph needs at least one vertex");
  std::set<Simplex> x_gens;
  for (int v = 0; v < vertex_count; ++v) x_gens.insert(Simplex{v});
  Graph g;
  for (auto [a, b] : edges) {
    x_gens.insert(Simplex{a, b});
    g.add_edge(a, b);
  }
  std::set<VertexId> a_set;
  if (a_vertices) {
    a_set = *a_vertices;
  } else {
    for (int v = 0; v < vertex_count; ++v)
      if (g.degree(v) == 1) a_set.insert(v);
  }
  std::set<Simplex> a_gens;
  for (VertexId v : a_set) a_gens.insert(Simplex{v});
  NamedPair np;
  np.name = name;
  np.pair = Pair::from_generators(x_gens, a_gens);
  np.provenance = "finite graph with its degree-1 vertices as A";
  np.expected.verdict = Outcome::computable_type;
  return np;
}

inline NamedPair generate(const std::string& name) {
  using namespace gallery_detail;
  std::string base = name;
  int param = -1;
  auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')')
      throw Error(errc::unknown_gallery_name, "bad gallery name: " + name);
    base = name.substr(0, open);
    std::string arg = name.substr(open + 1, name.size() - open - 2);
    try {
      param = std::stoi(arg);
    } catch (const std::exception&) {
      throw Error(errc::unknown_gallery_name,
                  "bad gallery parameter: " + name);
    }
  }
  auto need_param = [&]() {
    if (param < 0)
      throw Error(errc::unknown_gallery_name,
                  base + " needs a parameter, e.g. " + base + "(2)");
    return param;
  };
  if (base == "simplex") return make_simplex(need_param());
  if (base == "sphere") return make_sphere(need_param());
  if (base == "ball_pair") return make_ball_pair(need_param());
  if (base == "star") return make_star(need_param());
  if (base == "n_squares") return make_n_squares(need_param());
  if (base == "dunce_hat") return make_dunce_hat(false);
  if (base == "dunce_hat_with_A") return make_dunce_hat(true);
  if (base == "bing_house") return make_bing_house();
  if (base == "mobius_pair") return make_mobius(true);
  if (base == "mobius_bare") return make_mobius(false);
  if (base == "torus") return make_torus();
  if (base == "cylinder_theta_pair") return make_cylinder_theta_pair();
  if (base == "segment_bare") return make_segment_bare();
  throw Error(errc::unknown_gallery_name, "unknown gallery name: " + name);
}

inline std::vector<std::string> gallery_names() {
  return {"simplex(0)",       "simplex(1)",
          "simplex(2)",       "sphere(1)",
          "sphere(2)",        "ball_pair(1)",
          "ball_pair(2)",     "star(1)",
          "star(2)",          "star(5)",
          "n_squares(2)",     "n_squares(5)",
          "segment_bare",     "dunce_hat",
          "dunce_hat_with_A", "bing_house",
          "mobius_pair",      "mobius_bare",
          "torus",            "cylinder_theta_pair"};
}

struct SelfCheckReport {
  std::string name;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace gallery_detail {

// True for a connected graph made of exactly two vertex-disjoint cycles
// joined by a single path of bridge edges.
inline bool two_cycles_joined_by_arc(const Graph& g) {
  if (connected_components(g).size() != 1) return false;
  if (cycle_rank(g) != 2) return false;
  std::set<GraphEdge> cuts = bridges(g);
  if (cuts.empty()) return false;
  Graph cycles_only, arc_only;
  for (const GraphEdge& e : g.edges()) {
    if (cuts.count(e))
      arc_only.add_edge(e.first, e.second);
    else
      cycles_only.add_edge(e.first, e.second);
  }
  auto comps = connected_components(cycles_only);
  if (comps.size() != 2) return false;
  for (const auto& comp : comps)
    for (VertexId v : comp)
      if (cycles_only.degree(v) != 2) return false;
  // The bridges must form one simple path with an endpoint on each cycle.
  if (connected_components(arc_only).size() != 1) return false;
  std::vector<VertexId> arc_ends;
  for (VertexId v : arc_only.vertices()) {
    std::size_t d = arc_only.degree(v);
    if (d > 2) return false;
    if (d == 1) arc_ends.push_back(v);
  }
  if (arc_ends.size() != 2) return false;
  bool first_on_0 = comps[0].count(arc_ends[0]) > 0;
  bool second_on_1 = comps[1].count(arc_ends[1]) > 0;
  bool first_on_1 = comps[1].count(arc_ends[0]) > 0;
  bool second_on_0 = comps[0].count(arc_ends[1]) > 0;
  return (first_on_0 && second_on_1) || (first_on_1 && second_on_0);
}

inline bool is_single_cycle(const Graph& g) {
  if (g.edges().empty()) return false;
  if (connected_components(g).size() != 1) return false;
  if (cycle_rank(g) != 1) return false;
  for (VertexId v : g.vertices())
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace gallery_detail

// Verifies the stored structural facts of a gallery item against the
// constructed triangulation, plus per-space shape checks.
inline SelfCheckReport self_check(const NamedPair& np) {
  using namespace gallery_detail;
  SelfCheckReport report;
  report.name = np.name;
  auto fail = [&](const std::string& why) {
    report.violations.push_back(why);
  };

  if (np.expected.euler &&
      euler_characteristic(np.pair.X()) != *np.expected.euler)
    fail("euler characteristic is " +
         std::to_string(euler_characteristic(np.pair.X())) + ", expected " +
         std::to_string(*np.expected.euler));

  if (np.expected.no_free_simplices) {
    bool empty = boundary(np.pair.X(), BoundaryKind::one).empty();
    if (empty != *np.expected.no_free_simplices)
      fail("free-simplex boundary emptiness mismatch");
  }

  Verdict v = computable_type(np.pair);
  if (v.overall != np.expected.verdict) fail("verdict mismatch");
  for (const LocalVerdict& lv : v.locals)
    if (!check_certificate(lv.link, lv.certificate).ok)
      fail("certificate at vertex " + std::to_string(lv.vertex) +
           " does not check");

  std::string base = np.name.substr(0, np.name.find('('));
  if (base == "dunce_hat" || base == "dunce_hat_with_A") {
    MarkedLink corner = extract_marked_link(np.pair, 0);
    if (!two_cycles_joined_by_arc(corner.link))
      fail("corner link is not two cycles joined by an arc");
    if (base == "dunce_hat" && !corner.terminals.empty())
      fail("corner terminals should be empty");
    if (base == "dunce_hat_with_A" &&
        corner.terminals != std::set<VertexId>{1, 2})
      fail("corner terminals should be the arc endpoints");
    if (base == "dunce_hat") {
      bool corner_fails = false;
      for (const LocalVerdict& lv : v.locals)
        if (!lv.passes) corner_fails |= lv.vertex == 0;
      if (!corner_fails) fail("failing vertex is not the identified corner");
    }
  } else if (base == "bing_house") {
    std::size_t rank3 = 0;
    for (VertexId vert : np.pair.X().vertex_ids()) {
      Graph lk = extract_marked_link(np.pair, vert).link;
      if (connected_components(lk).size() != 1)
        fail("link of vertex " + std::to_string(vert) + " is disconnected");
      std::size_t r = cycle_rank(lk);
      if (r < 1 || r > 3)
        fail("link of vertex " + std::to_string(vert) +
             " is not a union of 1..3 cycles");
      if (r == 3) ++rank3;
    }
    if (rank3 != 2)
      fail("expected exactly two vertices with a 3-cycle link, found " +
           std::to_string(rank3));
  } else if (base == "torus") {
    for (VertexId vert : np.pair.X().vertex_ids())
      if (!is_single_cycle(extract_marked_link(np.pair, vert).link))
        fail("link of vertex " + std::to_string(vert) +
             " is not a single cycle");
  } else if (base == "mobius_pair" || base == "mobius_bare") {
    Complex rim = boundary(np.pair.X(), BoundaryKind::one);
    Graph rim_graph;
    for (const Simplex& s : rim.simplices())
      if (s.dimension() == 1)
        rim_graph.add_edge(s.vertices()[0], s.vertices()[1]);
    if (!is_single_cycle(rim_graph) || rim_graph.edges().size() != 5)
      fail("free-simplex boundary is not the boundary 5-cycle");
  } else if (base == "star") {
    std::set<VertexId> a_vertices;
    for (VertexId vert : np.pair.A().vertex_ids()) a_vertices.insert(vert);
    if (free_vertices(np.pair.X()) != a_vertices)
      fail("A is not exactly the free vertices of the star");
  }
  return report;
}

}  // namespace sct
