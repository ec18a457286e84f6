#pragma once

#include <future>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "sct/certificate.hpp"
#include "sct/subdivision.hpp"

namespace sct {

enum class Applicability {
  applicable,
  empty_interior_violated,
  dimension_unsupported,
  input_error,
  union_inconclusive,
};

enum class Outcome { computable_type, not_computable_type, inapplicable };

enum class LocalNote {
  free_vertex_outside_a,
  isolated_link_exception,
  tip_convention_applied,
  coexistence_rule_applied,
};

struct LocalVerdict {
  VertexId vertex = -1;
  bool passes = false;
  MarkedLink link;
  Certificate certificate;
  std::vector<LocalNote> notes;

  bool operator==(const LocalVerdict&) const = default;
};

struct Verdict {
  Applicability applicability = Applicability::applicable;
  Outcome overall = Outcome::inapplicable;
  std::vector<LocalVerdict> locals;
  std::vector<std::string> assumptions;
  std::string detail;

  bool operator==(const Verdict&) const = default;
};

struct LocalDecision {
  bool passes = false;
  Certificate certificate;
  std::vector<LocalNote> notes;
};

// Decides whether the cone over the marked link has the surjection
// property: every link edge must lie on a cycle or a terminal-terminal
// path, and the link must not be a single bare vertex with no terminals
// and the tip outside the marked set. That last configuration is the free
// vertex of the ambient complex left out of A; every other isolated-vertex
// configuration passes.
inline LocalDecision cone_surjection_property(const MarkedLink& m) {
  LocalDecision out;
  const Graph& g = m.link;
  std::set<GraphEdge> cuts = bridges(augment_with_apex(g, m.terminals));
  GraphEdge failing{-1, -1};
  bool found = false;
  for (const GraphEdge& e : g.edges()) {
    if (cuts.count(e)) {
      failing = e;
      found = true;
      break;  // edges iterate sorted; the first failure is canonical
    }
  }
  if (found) {
    out.passes = false;
    out.certificate = make_negative_certificate(m, failing);
    return out;
  }
  if (g.vertices().size() == 1 && g.edges().empty() && m.terminals.empty() &&
      !m.tip_in_marked) {
    NegativeCertificate cert;
    cert.kind = NegativeKind::isolated_tip;
    cert.vertex = *g.vertices().begin();
    out.passes = false;
    out.certificate = std::move(cert);
    out.notes.push_back(LocalNote::isolated_link_exception);
    return out;
  }
  PositiveCertificate cert = make_positive_certificate(m);
  bool tip_rule = false, coexistence_rule = false;
  for (const IsolatedVertex& iv : cert.isolated) {
    tip_rule |= iv.reason == IsolatedReason::tip_in_marked;
    coexistence_rule |= iv.reason == IsolatedReason::coexistence;
  }
  if (tip_rule) out.notes.push_back(LocalNote::tip_convention_applied);
  if (coexistence_rule)
    out.notes.push_back(LocalNote::coexistence_rule_applied);
  out.passes = true;
  out.certificate = std::move(cert);
  return out;
}

struct DecisionOptions {
  bool parallel = false;
};

namespace detail {

inline LocalVerdict decide_vertex(const Pair& p, VertexId v,
                                  const std::set<VertexId>& free_outside_a) {
  LocalVerdict lv;
  lv.vertex = v;
  lv.link = extract_marked_link(p, v);
  LocalDecision d = cone_surjection_property(lv.link);
  lv.passes = d.passes;
  lv.certificate = std::move(d.certificate);
  lv.notes = std::move(d.notes);
  if (free_outside_a.count(v))
    lv.notes.insert(lv.notes.begin(), LocalNote::free_vertex_outside_a);
  return lv;
}

}  // namespace detail

// Full decision for a pair: applicability checks, then one local cone
// decision per vertex. Local results are ordered by vertex id whether or
// not they are computed concurrently.
inline Verdict computable_type(const Pair& p,
                               const DecisionOptions& opts = {}) {
  Verdict v;
  if (!has_empty_interior(p)) {
    v.applicability = Applicability::empty_interior_violated;
    v.overall = Outcome::inapplicable;
    v.detail = "A contains a maximal simplex of X";
    return v;
  }
  if (p.X().dimension() >= 3) {
    v.applicability = Applicability::dimension_unsupported;
    v.overall = Outcome::inapplicable;
    v.detail = "some star has dimension >= 3";
    return v;
  }
  v.applicability = Applicability::applicable;

  std::set<VertexId> free_outside_a;
  for (VertexId fv : free_vertices(p.X()))
    if (!p.A().has_vertex(fv)) free_outside_a.insert(fv);

  std::vector<VertexId> verts = p.X().vertex_ids();
  v.locals.resize(verts.size());
  if (opts.parallel && verts.size() > 1) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> tasks;
    std::size_t chunk = (verts.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < verts.size(); begin += chunk) {
      std::size_t end = std::min(begin + chunk, verts.size());
      tasks.push_back(std::async(std::launch::async, [&, begin, end] {
        for (std::size_t i = begin; i < end; ++i)
          v.locals[i] = detail::decide_vertex(p, verts[i], free_outside_a);
      }));
    }
    for (auto& t : tasks) t.get();
  } else {
    for (std::size_t i = 0; i < verts.size(); ++i)
      v.locals[i] = detail::decide_vertex(p, verts[i], free_outside_a);
  }

  bool all_pass = true;
  for (const LocalVerdict& lv : v.locals) all_pass &= lv.passes;
  v.overall =
      all_pass ? Outcome::computable_type : Outcome::not_computable_type;

  for (VertexId fv : free_outside_a)
    v.assumptions.push_back("free vertex " + std::to_string(fv) +
                            " of X is not in A");
  for (const LocalVerdict& lv : v.locals) {
    for (LocalNote n : lv.notes) {
      if (n == LocalNote::tip_convention_applied ||
          n == LocalNote::coexistence_rule_applied ||
          n == LocalNote::isolated_link_exception) {
        v.assumptions.push_back("isolated-vertex rule applied at vertex " +
                                std::to_string(lv.vertex));
        break;
      }
    }
  }
  return v;
}

// Direct decision for a cone pair given by its base graph (a complex of
// dimension at most 1) and terminal vertices. The tip lies in the marked
// set exactly when the terminal set is non-empty, since the marked set is
// the base together with the cone over the terminals.
inline Verdict cone_pair_mode(const Complex& base,
                              const std::set<VertexId>& terminals) {
  Verdict v;
  if (base.dimension() > 1) {
    v.applicability = Applicability::dimension_unsupported;
    v.overall = Outcome::inapplicable;
    v.detail = "cone base must be a graph";
    return v;
  }
  for (VertexId n : terminals)
    if (!base.has_vertex(n))
      throw Error(errc::unknown_vertex,
                  "terminal " + std::to_string(n) + " not in base");
  // The cone over an isolated terminal is a maximal simplex of the cone
  // pair inside its marked set, which violates the empty-interior
  // hypothesis of the decision.
  for (const Simplex& m : base.maximal_simplices()) {
    if (m.dimension() == 0 && terminals.count(m.vertices()[0])) {
      v.applicability = Applicability::empty_interior_violated;
      v.overall = Outcome::inapplicable;
      v.detail = "isolated base vertex " + std::to_string(m.vertices()[0]) +
                 " is a terminal";
      return v;
    }
  }

  MarkedLink ml;
  ml.origin = -1;  // synthetic tip
  for (const Simplex& s : base.simplices()) {
    if (s.dimension() == 0)
      ml.link.add_vertex(s.vertices()[0]);
    else
      ml.link.add_edge(s.vertices()[0], s.vertices()[1]);
  }
  ml.terminals = terminals;
  ml.tip_in_marked = !terminals.empty();

  LocalDecision d = cone_surjection_property(ml);
  LocalVerdict lv;
  lv.vertex = ml.origin;
  lv.passes = d.passes;
  lv.link = std::move(ml);
  lv.certificate = std::move(d.certificate);
  lv.notes = std::move(d.notes);
  v.applicability = Applicability::applicable;
  v.overall = d.passes ? Outcome::computable_type
                       : Outcome::not_computable_type;
  v.locals.push_back(std::move(lv));
  return v;
}

// A cover of a pair by pairs of subcomplexes.
struct Decomposition {
  std::vector<Pair> pieces;
};

// Sufficient condition via finite unions: if every piece has computable
// type then so does the ambient pair. The converse direction is not
// available, so a failing piece yields an inconclusive verdict rather than
// a negative one.
inline Verdict union_check(const Pair& ambient, const Decomposition& d,
                           const DecisionOptions& opts = {}) {
  std::set<Simplex> x_union, a_union;
  for (const Pair& piece : d.pieces) {
    if (!piece.X().is_subcomplex_of(ambient.X()) ||
        !piece.A().is_subcomplex_of(ambient.A()))
      throw Error(errc::cover_violation,
                  "piece is not a pair of subcomplexes of the ambient pair");
    x_union.insert(piece.X().simplices().begin(), piece.X().simplices().end());
    a_union.insert(piece.A().simplices().begin(), piece.A().simplices().end());
  }
  if (x_union != ambient.X().simplices() ||
      a_union != ambient.A().simplices())
    throw Error(errc::cover_violation,
                "pieces do not cover the ambient pair");

  Verdict v;
  bool all_ct = true;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    Verdict pv = computable_type(d.pieces[i], opts);
    const char* label = pv.overall == Outcome::computable_type
                            ? "ComputableType"
                            : (pv.overall == Outcome::not_computable_type
                                   ? "NotComputableType"
                                   : "Inapplicable");
    v.assumptions.push_back("piece " + std::to_string(i) + ": " + label);
    all_ct &= pv.overall == Outcome::computable_type;
  }
  if (all_ct) {
    v.applicability = Applicability::applicable;
    v.overall = Outcome::computable_type;
  } else {
    v.applicability = Applicability::union_inconclusive;
    v.overall = Outcome::inapplicable;
    v.detail = "some piece is not decided positively; the union criterion "
               "is one-directional";
  }
  return v;
}

struct PlusBoundaryPair {
  Pair pair;
  Decomposition decomposition;
};

// The pair (X, plus-boundary of X) with its canonical cover by maximal
// simplices paired with their proper faces.
inline PlusBoundaryPair plus_boundary_pair(const Complex& x) {
  PlusBoundaryPair out;
  out.pair = Pair(x, boundary(x, BoundaryKind::plus));
  for (const Simplex& m : x.maximal_simplices()) {
    Complex piece_x = closure({m});
    out.decomposition.pieces.push_back(
        Pair(piece_x, boundary(piece_x, BoundaryKind::plus)));
  }
  return out;
}

}  // namespace sct
