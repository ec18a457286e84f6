#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "sct/marked_link.hpp"

namespace sct {

// Why an isolated link vertex is consistent with a positive verdict:
// it is a terminal, or the cone tip lies in the marked set, or the link
// has further components that pin the tip.
enum class IsolatedReason { terminal, tip_in_marked, coexistence };

enum class WalkKind { cycle, terminal_path };

// One edge of the link together with a simple walk through it: either a
// cycle, or a path whose two distinct endpoints are terminals. Cycles are
// stored without repeating the first vertex.
struct EdgeWalk {
  GraphEdge edge;
  WalkKind kind = WalkKind::cycle;
  std::vector<VertexId> walk;

  bool operator==(const EdgeWalk&) const = default;
};

struct IsolatedVertex {
  VertexId vertex = -1;
  IsolatedReason reason = IsolatedReason::coexistence;

  bool operator==(const IsolatedVertex&) const = default;
};

struct PositiveCertificate {
  std::vector<EdgeWalk> walks;          // one entry per link edge
  std::vector<IsolatedVertex> isolated; // one entry per degree-0 vertex

  bool operator==(const PositiveCertificate&) const = default;
};

// Negative witness. edge_cut: removing the edge separates its endpoints
// and one side never reaches a terminal. isolated_tip: the link is a single
// bare vertex, no terminals, tip outside the marked set.
enum class NegativeKind { edge_cut, isolated_tip };

struct NegativeCertificate {
  NegativeKind kind = NegativeKind::edge_cut;
  GraphEdge edge{-1, -1};
  std::set<VertexId> component;
  VertexId vertex = -1;

  bool operator==(const NegativeCertificate&) const = default;
};

using Certificate = std::variant<PositiveCertificate, NegativeCertificate>;

struct CertificateCheck {
  bool ok = true;
  std::string reason;  // short code, empty when ok

  explicit operator bool() const { return ok; }
};

inline CertificateCheck cert_failure(const std::string& code) {
  return CertificateCheck{false, code};
}

namespace detail {

inline bool walk_is_simple(const std::vector<VertexId>& walk) {
  std::set<VertexId> seen(walk.begin(), walk.end());
  return seen.size() == walk.size();
}

inline bool walk_contains_edge(const std::vector<VertexId>& walk,
                               const GraphEdge& e, bool wrap) {
  std::size_t n = walk.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (make_edge(walk[i], walk[i + 1]) == e) return true;
  return wrap && n >= 2 && make_edge(walk.back(), walk.front()) == e;
}

}  // namespace detail

inline CertificateCheck check_certificate(const MarkedLink& m,
                                          const PositiveCertificate& cert) {
  const Graph& g = m.link;
  // Exact cover: one walk per link edge, nothing else.
  std::set<GraphEdge> covered;
  for (const EdgeWalk& w : cert.walks) {
    if (!g.has_edge(w.edge)) return cert_failure("walk-edge-not-in-link");
    if (!covered.insert(w.edge).second)
      return cert_failure("duplicate-edge-assignment");
  }
  if (covered != g.edges()) return cert_failure("uncovered-edge");

  for (const EdgeWalk& w : cert.walks) {
    if (!detail::walk_is_simple(w.walk)) return cert_failure("walk-not-simple");
    for (VertexId v : w.walk)
      if (!g.has_vertex(v)) return cert_failure("walk-leaves-link");
    for (std::size_t i = 0; i + 1 < w.walk.size(); ++i)
      if (!g.has_edge(make_edge(w.walk[i], w.walk[i + 1])))
        return cert_failure("walk-not-a-walk");
    if (w.kind == WalkKind::cycle) {
      if (w.walk.size() < 3) return cert_failure("cycle-too-short");
      if (!g.has_edge(make_edge(w.walk.back(), w.walk.front())))
        return cert_failure("cycle-not-closed");
      if (!detail::walk_contains_edge(w.walk, w.edge, /*wrap=*/true))
        return cert_failure("walk-misses-edge");
    } else {
      if (w.walk.size() < 2) return cert_failure("path-too-short");
      if (!detail::walk_contains_edge(w.walk, w.edge, /*wrap=*/false))
        return cert_failure("walk-misses-edge");
      if (!m.terminals.count(w.walk.front()) ||
          !m.terminals.count(w.walk.back()))
        return cert_failure("path-endpoint-not-terminal");
      // Endpoints are distinct because the walk is simple and has >= 2
      // vertices.
    }
  }

  std::set<VertexId> isolated_expected;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) isolated_expected.insert(v);
  std::set<VertexId> isolated_listed;
  for (const IsolatedVertex& iv : cert.isolated) {
    if (!isolated_listed.insert(iv.vertex).second)
      return cert_failure("duplicate-isolated-vertex");
    switch (iv.reason) {
      case IsolatedReason::terminal:
        if (!m.terminals.count(iv.vertex))
          return cert_failure("isolated-reason-invalid");
        break;
      case IsolatedReason::tip_in_marked:
        if (!m.tip_in_marked) return cert_failure("isolated-reason-invalid");
        break;
      case IsolatedReason::coexistence:
        if (g.vertices().size() < 2)
          return cert_failure("isolated-reason-invalid");
        break;
    }
  }
  if (isolated_listed != isolated_expected)
    return cert_failure("isolated-vertices-mismatch");
  return CertificateCheck{};
}

inline CertificateCheck check_certificate(const MarkedLink& m,
                                          const NegativeCertificate& cert) {
  const Graph& g = m.link;
  if (cert.kind == NegativeKind::isolated_tip) {
    if (g.vertices() != std::set<VertexId>{cert.vertex})
      return cert_failure("not-a-lone-vertex");
    if (!g.edges().empty()) return cert_failure("not-a-lone-vertex");
    if (!m.terminals.empty()) return cert_failure("terminals-present");
    if (m.tip_in_marked) return cert_failure("tip-in-marked-set");
    return CertificateCheck{};
  }
  if (!g.has_edge(cert.edge)) return cert_failure("edge-not-in-link");
  if (cert.component.empty()) return cert_failure("component-empty");
  auto [u, w] = cert.edge;
  bool matches = false;
  if (cert.component == component_of(g, u, cert.edge)) {
    if (cert.component.count(w)) return cert_failure("endpoints-connected");
    matches = true;
  } else if (cert.component == component_of(g, w, cert.edge)) {
    if (cert.component.count(u)) return cert_failure("endpoints-connected");
    matches = true;
  }
  if (!matches) return cert_failure("component-mismatch");
  for (VertexId n : m.terminals)
    if (cert.component.count(n))
      return cert_failure("component-touches-terminals");
  return CertificateCheck{};
}

inline CertificateCheck check_certificate(const MarkedLink& m,
                                          const Certificate& cert) {
  if (std::holds_alternative<PositiveCertificate>(cert))
    return check_certificate(m, std::get<PositiveCertificate>(cert));
  return check_certificate(m, std::get<NegativeCertificate>(cert));
}

// Builds a concrete cycle or terminal path per link edge. Each search runs
// in the apex-augmented graph with the edge removed: the breadth-first path
// closes into a cycle through the edge, and if it crosses the apex the two
// apex neighbors become the terminal endpoints.
inline PositiveCertificate make_positive_certificate(const MarkedLink& m) {
  const Graph& g = m.link;
  Graph augmented = augment_with_apex(g, m.terminals);
  PositiveCertificate out;
  for (const GraphEdge& e : g.edges()) {
    auto path = shortest_path(augmented, e.first, e.second, e);
    if (!path)
      throw Error(errc::certificate_unavailable,
                  "edge " + std::to_string(e.first) + "-" +
                      std::to_string(e.second) +
                      " is on no cycle or terminal path");
    auto apex_it = std::find(path->begin(), path->end(), apex_node);
    EdgeWalk walk;
    walk.edge = e;
    if (apex_it == path->end()) {
      walk.kind = WalkKind::cycle;
      walk.walk = *path;  // closing edge back to the front is e
    } else {
      walk.kind = WalkKind::terminal_path;
      // path = e.first .. a, apex, b .. e.second with a, b terminals.
      // Reassemble as a .. e.first, e.second .. b so the walk stays simple
      // and crosses e.
      std::vector<VertexId> before(path->begin(), apex_it);
      std::vector<VertexId> after(apex_it + 1, path->end());
      std::reverse(before.begin(), before.end());
      std::reverse(after.begin(), after.end());
      walk.walk = std::move(before);
      walk.walk.insert(walk.walk.end(), after.begin(), after.end());
    }
    out.walks.push_back(std::move(walk));
  }
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 0) continue;
    IsolatedVertex iv;
    iv.vertex = v;
    if (m.terminals.count(v))
      iv.reason = IsolatedReason::terminal;
    else if (m.tip_in_marked)
      iv.reason = IsolatedReason::tip_in_marked;
    else if (g.vertices().size() >= 2)
      iv.reason = IsolatedReason::coexistence;
    else
      throw Error(errc::certificate_unavailable,
                  "lone bare vertex " + std::to_string(v) +
                      " admits no positive certificate");
    out.isolated.push_back(iv);
  }
  return out;
}

// Negative witness for a failing edge: the connected component of one
// endpoint after removing the edge, disjoint from the terminals. Prefers
// the endpoint whose component avoids the terminals; when both qualify,
// the smaller label wins.
inline NegativeCertificate make_negative_certificate(const MarkedLink& m,
                                                     const GraphEdge& e) {
  const Graph& g = m.link;
  if (!g.has_edge(e))
    throw Error(errc::invalid_argument, "edge not in link");
  if (edge_passes(g, m.terminals, e))
    throw Error(errc::not_a_failure, "edge passes the cone criterion");
  auto disjoint = [&](const std::set<VertexId>& comp) {
    for (VertexId n : m.terminals)
      if (comp.count(n)) return false;
    return true;
  };
  NegativeCertificate out;
  out.kind = NegativeKind::edge_cut;
  out.edge = e;
  std::set<VertexId> side_u = component_of(g, e.first, e);
  if (disjoint(side_u)) {
    out.component = std::move(side_u);
  } else {
    out.component = component_of(g, e.second, e);
  }
  return out;
}

}  // namespace sct
