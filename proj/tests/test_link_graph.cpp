#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sct/certificate.hpp"
#include "sct/gallery.hpp"

using namespace sct;

namespace {

Graph path_graph(std::initializer_list<VertexId> vs) {
  Graph g;
  const VertexId* prev = nullptr;
  for (const VertexId& v : vs) {
    g.add_vertex(v);
    if (prev) g.add_edge(*prev, v);
    prev = &v;
  }
  return g;
}

Graph cycle_graph(std::initializer_list<VertexId> vs) {
  Graph g = path_graph(vs);
  g.add_edge(*vs.begin(), *(vs.end() - 1));
  return g;
}

// Two triangles 0-1-2 and 5-6-7 joined by the arc 2-3-4-5.
Graph two_cycles_arc() {
  Graph g = cycle_graph({0, 1, 2});
  Graph c2 = cycle_graph({5, 6, 7});
  for (const GraphEdge& e : c2.edges()) g.add_edge(e.first, e.second);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  return g;
}

}  // namespace

TEST_CASE("extract_marked_link on the basic pairs") {
  NamedPair sphere = generate("sphere(2)");
  MarkedLink at0 = extract_marked_link(sphere.pair, 0);
  CHECK(at0.link.vertices() == std::set<VertexId>{1, 2, 3});
  CHECK(at0.link.edges() ==
        std::set<GraphEdge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(at0.terminals.empty());
  CHECK_FALSE(at0.tip_in_marked);

  NamedPair disk = generate("ball_pair(2)");
  MarkedLink rim = extract_marked_link(disk.pair, 0);
  CHECK(rim.link.edges() == std::set<GraphEdge>{{1, 2}});
  CHECK(rim.terminals == std::set<VertexId>{1, 2});
  CHECK(rim.tip_in_marked);
}

TEST_CASE("extract_marked_link error paths") {
  Pair deep = Pair::from_generators({Simplex{0, 1, 2, 3}}, {});
  CHECK_THROWS_AS(extract_marked_link(deep, 0), Error);

  // A triangle inside A makes the link of its vertices in A carry an edge.
  Complex tri = closure({Simplex{0, 1, 2}});
  Pair fat(tri, tri);
  CHECK_THROWS_AS(extract_marked_link(fat, 0), Error);

  Pair edge = Pair::from_generators({Simplex{0, 1}}, {});
  CHECK_THROWS_AS(extract_marked_link(edge, 5), Error);
}

TEST_CASE("bridges on small graphs") {
  CHECK(bridges(path_graph({0, 1, 2})) ==
        std::set<GraphEdge>{{0, 1}, {1, 2}});
  CHECK(bridges(cycle_graph({0, 1, 2})).empty());
  CHECK(bridges(two_cycles_arc()) ==
        std::set<GraphEdge>{{2, 3}, {3, 4}, {4, 5}});
}

TEST_CASE("bridges agree with the removal oracle") {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    Graph g = oracle::random_graph(rng, 10);
    CHECK(bridges(g) == oracle::bridge_oracle(g));
  }
}

TEST_CASE("apex augmentation") {
  Graph e = path_graph({4, 7});
  Graph t = augment_with_apex(e, {4, 7});
  CHECK(t.edges() == std::set<GraphEdge>{{4, 7},
                                         {apex_node, 4},
                                         {apex_node, 7}});

  Graph lone = augment_with_apex(e, {});
  CHECK(lone.edges() == e.edges());
  CHECK(lone.has_vertex(apex_node));

  Graph p = path_graph({0, 1, 2, 3});
  Graph ring = augment_with_apex(p, {0, 3});
  CHECK(bridges(ring).empty());

  CHECK_THROWS_AS(augment_with_apex(e, {9}), Error);
}

TEST_CASE("a single terminal never changes bridge status") {
  std::mt19937 rng(37);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(rng, 8);
    if (g.vertices().empty()) continue;
    VertexId n = *g.vertices().begin();
    Graph aug = augment_with_apex(g, {n});
    std::set<GraphEdge> before = bridges(g);
    std::set<GraphEdge> after;
    for (const GraphEdge& e : bridges(aug))
      if (g.has_edge(e)) after.insert(e);
    CHECK(before == after);
  }
}

TEST_CASE("edge_passes examples") {
  Graph p = path_graph({0, 1, 2, 3});
  CHECK(edge_passes(p, {0, 3}, {1, 2}));
  CHECK_FALSE(edge_passes(p, {}, {1, 2}));

  Graph d = two_cycles_arc();
  CHECK_FALSE(edge_passes(d, {}, {3, 4}));
  CHECK(edge_passes(d, {2, 5}, {3, 4}));
  CHECK(edge_passes(d, {}, {0, 1}));  // cycle edge
}

TEST_CASE("edge_passes is monotone in the terminal set") {
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(rng, 7);
    if (g.edges().empty()) continue;
    std::set<VertexId> n = oracle::random_subset(rng, g.vertices());
    std::set<VertexId> larger = n;
    for (VertexId v : oracle::random_subset(rng, g.vertices()))
      larger.insert(v);
    for (const GraphEdge& e : g.edges())
      if (edge_passes(g, n, e)) CHECK(edge_passes(g, larger, e));
  }
}

TEST_CASE("positive certificate for a plain cycle") {
  MarkedLink m;
  m.link = cycle_graph({0, 1, 2});
  PositiveCertificate cert = make_positive_certificate(m);
  CHECK(cert.walks.size() == 3);
  for (const EdgeWalk& w : cert.walks) CHECK(w.kind == WalkKind::cycle);
  CHECK(check_certificate(m, cert).ok);
}

TEST_CASE("positive certificate for a single terminal edge") {
  MarkedLink m;
  m.link = path_graph({1, 2});
  m.terminals = {1, 2};
  m.tip_in_marked = true;
  PositiveCertificate cert = make_positive_certificate(m);
  REQUIRE(cert.walks.size() == 1);
  CHECK(cert.walks[0].kind == WalkKind::terminal_path);
  CHECK(cert.walks[0].walk == std::vector<VertexId>{1, 2});
  CHECK(check_certificate(m, cert).ok);
}

TEST_CASE("positive certificate unavailable on a failing link") {
  MarkedLink m;
  m.link = two_cycles_arc();
  CHECK_THROWS_AS(make_positive_certificate(m), Error);
}

TEST_CASE("negative certificate on the dunce-style arc") {
  MarkedLink m;
  m.link = two_cycles_arc();
  NegativeCertificate cert = make_negative_certificate(m, {3, 4});
  CHECK(cert.component == std::set<VertexId>{0, 1, 2, 3});
  CHECK(check_certificate(m, cert).ok);
}

TEST_CASE("negative certificate tie-breaking prefers the terminal-free side") {
  // Path a-u-w with a terminal: the failing edge (u,w) must be witnessed
  // by the component {w}, confirmed against the exhaustive oracle.
  MarkedLink m;
  m.link = path_graph({0, 1, 2});  // a=0, u=1, w=2
  m.terminals = {0};
  m.tip_in_marked = true;
  CHECK_FALSE(oracle::edge_passes_oracle(m.link, m.terminals, {1, 2}));
  NegativeCertificate cert = make_negative_certificate(m, {1, 2});
  CHECK(cert.component == std::set<VertexId>{2});
  CHECK(check_certificate(m, cert).ok);

  // Bare single edge: both sides qualify, smaller endpoint wins.
  MarkedLink bare;
  bare.link = path_graph({4, 9});
  NegativeCertificate c2 = make_negative_certificate(bare, {4, 9});
  CHECK(c2.component == std::set<VertexId>{4});
}

TEST_CASE("negative certificate refuses a passing edge") {
  MarkedLink m;
  m.link = cycle_graph({0, 1, 2});
  CHECK_THROWS_AS(make_negative_certificate(m, {0, 1}), Error);
}

TEST_CASE("certificate checker rejects corrupted negatives") {
  MarkedLink m;
  m.link = two_cycles_arc();
  m.terminals = {0};
  m.tip_in_marked = true;
  NegativeCertificate cert = make_negative_certificate(m, {3, 4});
  CHECK(check_certificate(m, cert).ok);

  CHECK(cert.component == std::set<VertexId>{4, 5, 6, 7});  // avoids N = {0}

  NegativeCertificate touching = cert;
  touching.component = component_of(m.link, 3, GraphEdge{3, 4});
  CHECK_FALSE(check_certificate(m, touching).ok);  // contains terminal 0

  NegativeCertificate wrong = cert;
  wrong.component.insert(1);
  CHECK_FALSE(check_certificate(m, wrong).ok);
}

TEST_CASE("maker certificates always check on random marked links") {
  std::mt19937 rng(43);
  for (int i = 0; i < 500; ++i) {
    MarkedLink m = oracle::random_marked_link(rng);
    std::set<GraphEdge> cuts =
        bridges(augment_with_apex(m.link, m.terminals));
    bool all_pass = true;
    for (const GraphEdge& e : m.link.edges()) {
      if (cuts.count(e)) {
        all_pass = false;
        NegativeCertificate cert = make_negative_certificate(m, e);
        CHECK(check_certificate(m, cert).ok);
      }
    }
    bool lone_bare = m.link.vertices().size() == 1 &&
                     m.link.edges().empty() && m.terminals.empty() &&
                     !m.tip_in_marked;
    if (all_pass && !lone_bare) {
      PositiveCertificate cert = make_positive_certificate(m);
      CHECK(check_certificate(m, cert).ok);
    }
  }
}
