#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sct/decision.hpp"
#include "sct/gallery.hpp"

namespace sct {

inline constexpr const char* tool_name = "sct";
inline constexpr const char* tool_version = "0.1.0";
inline constexpr const char* report_schema = "sct-report/1";

// ---------------------------------------------------------------------------
// Pair documents
// ---------------------------------------------------------------------------

struct PairDocument {
  std::string name;
  std::vector<std::string> vertex_names;  // optional; index is the id
  Pair pair;
};

namespace io_detail {

inline VertexId resolve_vertex(const nlohmann::json& entry,
                               const std::vector<std::string>& names) {
  if (entry.is_number_integer()) {
    long long v = entry.get<long long>();
    if (v < 0)
      throw Error(errc::parse_error, "vertex ids must be non-negative");
    return static_cast<VertexId>(v);
  }
  if (entry.is_string()) {
    const std::string s = entry.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<VertexId>(i);
    throw Error(errc::parse_error, "unknown vertex name: " + s);
  }
  throw Error(errc::parse_error, "vertex entries must be integers or names");
}

inline std::set<Simplex> parse_simplex_list(
    const nlohmann::json& list, const std::vector<std::string>& names,
    const char* field) {
  if (!list.is_array())
    throw Error(errc::parse_error,
                std::string(field) + " must be an array of simplices");
  std::set<Simplex> out;
  for (const auto& entry : list) {
    if (!entry.is_array())
      throw Error(errc::parse_error,
                  std::string(field) + " entries must be vertex lists");
    std::vector<VertexId> vs;
    for (const auto& vertex : entry) vs.push_back(resolve_vertex(vertex, names));
    out.insert(Simplex(std::move(vs)));
  }
  return out;
}

}  // namespace io_detail

inline PairDocument parse_pair_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(errc::parse_error, e.what());  // message carries the byte
  }
  if (!doc.is_object())
    throw Error(errc::parse_error, "document must be a JSON object");
  PairDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw Error(errc::parse_error, "name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array())
      throw Error(errc::parse_error, "vertices must be an array of names");
    for (const auto& n : doc["vertices"]) {
      if (!n.is_string())
        throw Error(errc::parse_error, "vertex names must be strings");
      out.vertex_names.push_back(n.get<std::string>());
    }
  }
  if (!doc.contains("X"))
    throw Error(errc::parse_error, "document needs an X field");
  std::set<Simplex> x_gens =
      io_detail::parse_simplex_list(doc["X"], out.vertex_names, "X");
  std::set<Simplex> a_gens;
  if (doc.contains("A"))
    a_gens = io_detail::parse_simplex_list(doc["A"], out.vertex_names, "A");
  if (x_gens.empty())
    throw Error(errc::parse_error, "X must list at least one simplex");
  out.pair = Pair::from_generators(x_gens, a_gens);
  return out;
}

// Canonical serialization: maximal simplices in sorted order, so equal
// pairs yield byte-identical documents and parsing restores the pair.
inline std::string serialize_pair_document(
    const Pair& p, const std::string& name = "",
    const std::vector<std::string>& vertex_names = {}) {
  nlohmann::json doc;
  auto emit = [](const Complex& c) {
    nlohmann::json arr = nlohmann::json::array();
    std::vector<Simplex> maxes = c.maximal_simplices();
    std::sort(maxes.begin(), maxes.end());
    for (const Simplex& s : maxes) arr.push_back(s.vertices());
    return arr;
  };
  doc["X"] = emit(p.X());
  doc["A"] = emit(p.A());
  if (!name.empty()) doc["name"] = name;
  if (!vertex_names.empty()) doc["vertices"] = vertex_names;
  return doc.dump();
}

inline std::string input_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

// ---------------------------------------------------------------------------
// Enum names
// ---------------------------------------------------------------------------

inline std::string to_string(Applicability a) {
  switch (a) {
    case Applicability::applicable: return "Applicable";
    case Applicability::empty_interior_violated: return "EmptyInteriorViolated";
    case Applicability::dimension_unsupported: return "DimensionUnsupported";
    case Applicability::input_error: return "InputError";
    case Applicability::union_inconclusive: return "UnionInconclusive";
  }
  return "?";
}

inline Applicability applicability_from_string(const std::string& s) {
  if (s == "Applicable") return Applicability::applicable;
  if (s == "EmptyInteriorViolated") return Applicability::empty_interior_violated;
  if (s == "DimensionUnsupported") return Applicability::dimension_unsupported;
  if (s == "InputError") return Applicability::input_error;
  if (s == "UnionInconclusive") return Applicability::union_inconclusive;
  throw Error(errc::parse_error, "bad applicability: " + s);
}

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::computable_type: return "ComputableType";
    case Outcome::not_computable_type: return "NotComputableType";
    case Outcome::inapplicable: return "Inapplicable";
  }
  return "?";
}

inline Outcome outcome_from_string(const std::string& s) {
  if (s == "ComputableType") return Outcome::computable_type;
  if (s == "NotComputableType") return Outcome::not_computable_type;
  if (s == "Inapplicable") return Outcome::inapplicable;
  throw Error(errc::parse_error, "bad outcome: " + s);
}

inline std::string to_string(LocalNote n) {
  switch (n) {
    case LocalNote::free_vertex_outside_a: return "FreeVertexOutsideA";
    case LocalNote::isolated_link_exception: return "IsolatedLinkException";
    case LocalNote::tip_convention_applied: return "TipConventionApplied";
    case LocalNote::coexistence_rule_applied: return "CoexistenceRuleApplied";
  }
  return "?";
}

inline LocalNote local_note_from_string(const std::string& s) {
  if (s == "FreeVertexOutsideA") return LocalNote::free_vertex_outside_a;
  if (s == "IsolatedLinkException") return LocalNote::isolated_link_exception;
  if (s == "TipConventionApplied") return LocalNote::tip_convention_applied;
  if (s == "CoexistenceRuleApplied") return LocalNote::coexistence_rule_applied;
  throw Error(errc::parse_error, "bad note: " + s);
}

inline std::string to_string(IsolatedReason r) {
  switch (r) {
    case IsolatedReason::terminal: return "Terminal";
    case IsolatedReason::tip_in_marked: return "TipInMarked";
    case IsolatedReason::coexistence: return "Coexistence";
  }
  return "?";
}

inline IsolatedReason isolated_reason_from_string(const std::string& s) {
  if (s == "Terminal") return IsolatedReason::terminal;
  if (s == "TipInMarked") return IsolatedReason::tip_in_marked;
  if (s == "Coexistence") return IsolatedReason::coexistence;
  throw Error(errc::parse_error, "bad isolated reason: " + s);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Report {
  std::string input_name;
  std::string digest;
  Verdict verdict;

  bool operator==(const Report&) const = default;
};

namespace io_detail {

inline nlohmann::json edge_json(const GraphEdge& e) {
  return nlohmann::json::array({e.first, e.second});
}

inline GraphEdge edge_from_json(const nlohmann::json& j) {
  return GraphEdge{j.at(0).get<VertexId>(), j.at(1).get<VertexId>()};
}

inline nlohmann::json link_json(const MarkedLink& m) {
  nlohmann::json j;
  j["origin"] = m.origin;
  j["vertices"] = std::vector<VertexId>(m.link.vertices().begin(),
                                        m.link.vertices().end());
  nlohmann::json edges = nlohmann::json::array();
  for (const GraphEdge& e : m.link.edges()) edges.push_back(edge_json(e));
  j["edges"] = edges;
  j["terminals"] =
      std::vector<VertexId>(m.terminals.begin(), m.terminals.end());
  j["tipInMarked"] = m.tip_in_marked;
  return j;
}

inline MarkedLink link_from_json(const nlohmann::json& j) {
  MarkedLink m;
  m.origin = j.at("origin").get<VertexId>();
  for (const auto& v : j.at("vertices")) m.link.add_vertex(v.get<VertexId>());
  for (const auto& e : j.at("edges")) {
    GraphEdge edge = edge_from_json(e);
    m.link.add_edge(edge.first, edge.second);
  }
  for (const auto& t : j.at("terminals"))
    m.terminals.insert(t.get<VertexId>());
  m.tip_in_marked = j.at("tipInMarked").get<bool>();
  return m;
}

inline nlohmann::json certificate_json(const Certificate& cert) {
  nlohmann::json j;
  if (std::holds_alternative<PositiveCertificate>(cert)) {
    const auto& pos = std::get<PositiveCertificate>(cert);
    j["type"] = "positive";
    nlohmann::json walks = nlohmann::json::array();
    for (const EdgeWalk& w : pos.walks) {
      nlohmann::json wj;
      wj["edge"] = edge_json(w.edge);
      wj["kind"] = w.kind == WalkKind::cycle ? "Cycle" : "TerminalPath";
      wj["walk"] = w.walk;
      walks.push_back(wj);
    }
    j["walks"] = walks;
    nlohmann::json isolated = nlohmann::json::array();
    for (const IsolatedVertex& iv : pos.isolated) {
      nlohmann::json ij;
      ij["vertex"] = iv.vertex;
      ij["reason"] = to_string(iv.reason);
      isolated.push_back(ij);
    }
    j["isolated"] = isolated;
  } else {
    const auto& neg = std::get<NegativeCertificate>(cert);
    j["type"] = "negative";
    j["kind"] =
        neg.kind == NegativeKind::edge_cut ? "EdgeCut" : "IsolatedTip";
    j["edge"] = edge_json(neg.edge);
    j["component"] =
        std::vector<VertexId>(neg.component.begin(), neg.component.end());
    j["vertex"] = neg.vertex;
  }
  return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  if (j.at("type") == "positive") {
    PositiveCertificate pos;
    for (const auto& wj : j.at("walks")) {
      EdgeWalk w;
      w.edge = edge_from_json(wj.at("edge"));
      w.kind = wj.at("kind") == "Cycle" ? WalkKind::cycle
                                        : WalkKind::terminal_path;
      for (const auto& v : wj.at("walk")) w.walk.push_back(v.get<VertexId>());
      pos.walks.push_back(std::move(w));
    }
    for (const auto& ij : j.at("isolated")) {
      IsolatedVertex iv;
      iv.vertex = ij.at("vertex").get<VertexId>();
      iv.reason = isolated_reason_from_string(ij.at("reason"));
      pos.isolated.push_back(iv);
    }
    return pos;
  }
  NegativeCertificate neg;
  neg.kind = j.at("kind") == "EdgeCut" ? NegativeKind::edge_cut
                                       : NegativeKind::isolated_tip;
  neg.edge = edge_from_json(j.at("edge"));
  for (const auto& v : j.at("component"))
    neg.component.insert(v.get<VertexId>());
  neg.vertex = j.at("vertex").get<VertexId>();
  return neg;
}

}  // namespace io_detail

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["schema"] = report_schema;
  j["tool"] = {{"name", tool_name}, {"version", tool_version}};
  j["input"] = {{"name", r.input_name}, {"digest", r.digest}};
  j["applicability"] = to_string(r.verdict.applicability);
  j["overall"] = to_string(r.verdict.overall);
  j["detail"] = r.verdict.detail;
  j["assumptions"] = r.verdict.assumptions;
  nlohmann::json locals = nlohmann::json::array();
  for (const LocalVerdict& lv : r.verdict.locals) {
    nlohmann::json lj;
    lj["vertex"] = lv.vertex;
    lj["passes"] = lv.passes;
    lj["link"] = io_detail::link_json(lv.link);
    lj["certificate"] = io_detail::certificate_json(lv.certificate);
    nlohmann::json notes = nlohmann::json::array();
    for (LocalNote n : lv.notes) notes.push_back(to_string(n));
    lj["notes"] = notes;
    locals.push_back(lj);
  }
  j["locals"] = locals;
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.input_name = j.at("input").at("name").get<std::string>();
  r.digest = j.at("input").at("digest").get<std::string>();
  r.verdict.applicability =
      applicability_from_string(j.at("applicability").get<std::string>());
  r.verdict.overall = outcome_from_string(j.at("overall").get<std::string>());
  r.verdict.detail = j.at("detail").get<std::string>();
  for (const auto& a : j.at("assumptions"))
    r.verdict.assumptions.push_back(a.get<std::string>());
  for (const auto& lj : j.at("locals")) {
    LocalVerdict lv;
    lv.vertex = lj.at("vertex").get<VertexId>();
    lv.passes = lj.at("passes").get<bool>();
    lv.link = io_detail::link_from_json(lj.at("link"));
    lv.certificate = io_detail::certificate_from_json(lj.at("certificate"));
    for (const auto& n : lj.at("notes"))
      lv.notes.push_back(local_note_from_string(n.get<std::string>()));
    r.verdict.locals.push_back(std::move(lv));
  }
  return r;
}

inline int exit_code_for(const Verdict& v) {
  switch (v.overall) {
    case Outcome::computable_type: return 0;
    case Outcome::not_computable_type: return 1;
    case Outcome::inapplicable: return 2;
  }
  return 2;
}

namespace io_detail {

inline std::string format_vertex_set(const std::set<VertexId>& s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace io_detail

inline std::string render_human_report(const Report& r) {
  std::string out;
  out += "input: " + (r.input_name.empty() ? "(unnamed)" : r.input_name) +
         "  digest: " + r.digest + "\n";
  out += "applicability: " + to_string(r.verdict.applicability) + "\n";
  out += "overall: " + to_string(r.verdict.overall) + "\n";
  if (!r.verdict.detail.empty()) out += "detail: " + r.verdict.detail + "\n";
  if (!r.verdict.locals.empty()) {
    std::size_t passing = 0;
    for (const LocalVerdict& lv : r.verdict.locals) passing += lv.passes;
    out += "local cones: " + std::to_string(passing) + " of " +
           std::to_string(r.verdict.locals.size()) + " pass\n";
    for (const LocalVerdict& lv : r.verdict.locals) {
      if (lv.passes) continue;
      std::string vertex_label = lv.vertex == -1
                                     ? std::string("tip")
                                     : std::to_string(lv.vertex);
      if (std::holds_alternative<NegativeCertificate>(lv.certificate)) {
        const auto& neg = std::get<NegativeCertificate>(lv.certificate);
        if (neg.kind == NegativeKind::edge_cut) {
          out += "  vertex " + vertex_label + ": FAIL - link edge [" +
                 std::to_string(neg.edge.first) + "," +
                 std::to_string(neg.edge.second) +
                 "] is not on a cycle or an N-to-N path; N = " +
                 io_detail::format_vertex_set(lv.link.terminals) +
                 "; cutting it leaves component " +
                 io_detail::format_vertex_set(neg.component) +
                 " disjoint from N\n";
        } else {
          out += "  vertex " + vertex_label +
                 ": FAIL - link is a single bare vertex [" +
                 std::to_string(neg.vertex) +
                 "] with no terminals and the tip outside the marked set\n";
        }
      }
    }
  }
  for (const std::string& a : r.verdict.assumptions)
    out += "note: " + a + "\n";
  return out;
}

inline Report make_report(const Pair& p, const Verdict& v,
                          const std::string& input_name) {
  Report r;
  r.input_name = input_name;
  r.digest = input_digest(serialize_pair_document(p));
  r.verdict = v;
  return r;
}

}  // namespace sct
