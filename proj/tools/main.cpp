// sct: decides whether a finite simplicial pair (X, A) has computable
// type, by checking the cone criterion on the link of every vertex.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sct/io.hpp"
#include "sct/sct.hpp"

namespace {

using namespace sct;

// Inputs are file paths, "-" for stdin, or gallery:NAME for built-ins.
PairDocument load_input(const std::string& spec) {
  if (spec.rfind("gallery:", 0) == 0) {
    NamedPair np = generate(spec.substr(8));
    PairDocument doc;
    doc.name = spec;
    doc.pair = np.pair;
    return doc;
  }
  std::string text;
  if (spec == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(spec, std::ios::binary);
    if (!in)
      throw Error(errc::parse_error, "cannot open " + spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  PairDocument doc = parse_pair_document(text);
  if (doc.name.empty()) doc.name = spec;
  return doc;
}

void print_report(const Report& report, bool as_json) {
  if (as_json)
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << render_human_report(report);
}

int cmd_check(const std::string& input, bool as_json, bool parallel) {
  PairDocument doc = load_input(input);
  Verdict v = computable_type(doc.pair, DecisionOptions{parallel});
  Report report = make_report(doc.pair, v, doc.name);
  print_report(report, as_json);
  return exit_code_for(v);
}

int cmd_check_cone(const std::string& input, bool as_json) {
  PairDocument doc = load_input(input);
  if (doc.pair.A().dimension() > 0)
    throw Error(errc::invalid_argument,
                "check-cone expects A to list terminal vertices only");
  std::set<VertexId> terminals;
  for (VertexId v : doc.pair.A().vertex_ids()) terminals.insert(v);
  Verdict v = cone_pair_mode(doc.pair.X(), terminals);
  Report report = make_report(doc.pair, v, doc.name);
  print_report(report, as_json);
  return exit_code_for(v);
}

int cmd_link(const std::string& input, VertexId vertex) {
  PairDocument doc = load_input(input);
  Complex link_x = link(doc.pair.X(), vertex);
  Complex link_a = doc.pair.A().has_vertex(vertex)
                       ? link(doc.pair.A(), vertex)
                       : Complex();
  std::cout << serialize_pair_document(Pair(link_x, link_a)) << "\n";
  return 0;
}

int cmd_boundary(const std::string& input, const std::string& kind_name) {
  PairDocument doc = load_input(input);
  BoundaryKind kind;
  if (kind_name == "one")
    kind = BoundaryKind::one;
  else if (kind_name == "plus")
    kind = BoundaryKind::plus;
  else if (kind_name == "odd")
    kind = BoundaryKind::odd;
  else
    throw Error(errc::invalid_argument, "kind must be one, plus or odd");
  Complex b = boundary(doc.pair.X(), kind);
  std::cout << serialize_pair_document(Pair(b, Complex())) << "\n";
  return 0;
}

int cmd_subdivide(const std::string& input, int iterations) {
  PairDocument doc = load_input(input);
  Pair current = doc.pair;
  std::vector<std::string> names;
  for (int i = 0; i < iterations; ++i) {
    Subdivision sd = barycentric_subdivision_named(current);
    current = sd.pair;
    names = sd.vertex_names;  // names refer to the previous iteration's ids
  }
  std::cout << serialize_pair_document(current, doc.name, names) << "\n";
  return 0;
}

int cmd_union_check(const std::string& ambient,
                    const std::vector<std::string>& piece_specs,
                    bool as_json) {
  PairDocument doc = load_input(ambient);
  Decomposition d;
  for (const std::string& spec : piece_specs)
    d.pieces.push_back(load_input(spec).pair);
  Verdict v = union_check(doc.pair, d);
  Report report = make_report(doc.pair, v, doc.name);
  print_report(report, as_json);
  return exit_code_for(v);
}

int cmd_gallery(const std::string& name, bool emit) {
  if (name.empty() || name == "list") {
    for (const std::string& n : gallery_names()) {
      NamedPair np = generate(n);
      std::cout << n << "\t" << np.provenance << "\n";
    }
    return 0;
  }
  NamedPair np = generate(name);
  if (emit) {
    std::cout << serialize_pair_document(np.pair, np.name) << "\n";
    return 0;
  }
  const Complex& x = np.pair.X();
  std::cout << "name: " << np.name << "\n"
            << "provenance: " << np.provenance << "\n"
            << "vertices: " << x.count_of_dimension(0)
            << ", edges: " << x.count_of_dimension(1)
            << ", triangles: " << x.count_of_dimension(2) << "\n"
            << "A simplices: " << np.pair.A().size() << "\n"
            << "euler characteristic: " << euler_characteristic(x) << "\n"
            << "expected verdict: " << to_string(np.expected.verdict)
            << "\n";
  return 0;
}

int cmd_self_test() {
  bool all_ok = true;
  for (const std::string& name : gallery_names()) {
    SelfCheckReport report = self_check(generate(name));
    if (report.ok()) {
      std::cout << name << ": ok\n";
    } else {
      all_ok = false;
      for (const std::string& v : report.violations)
        std::cout << name << ": FAIL " << v << "\n";
    }
  }
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sct " + std::string(tool_version) +
      " - decides computable type for finite simplicial pairs (X, A)"};
  app.require_subcommand(1);

  std::string input, kind = "one", gallery_name;
  std::vector<std::string> pieces;
  bool as_json = false, parallel = false, emit = false;
  VertexId vertex = 0;
  int iterations = 1;

  CLI::App* check = app.add_subcommand(
      "check", "decide computable type for a pair document");
  check->add_option("input", input, "file, - for stdin, or gallery:NAME")
      ->required();
  check->add_flag("--json", as_json, "emit the structured report");
  check->add_flag("--parallel", parallel,
                  "decide vertices concurrently (same output)");

  CLI::App* check_cone = app.add_subcommand(
      "check-cone",
      "decide a cone pair given its base graph L (as X) and terminal "
      "vertices N (as A)");
  check_cone->add_option("input", input, "file, - for stdin, or gallery:NAME")
      ->required();
  check_cone->add_flag("--json", as_json, "emit the structured report");

  CLI::App* link_cmd =
      app.add_subcommand("link", "print the link of a vertex as a pair");
  link_cmd->add_option("input", input)->required();
  link_cmd->add_option("--vertex", vertex, "vertex id")->required();

  CLI::App* boundary_cmd = app.add_subcommand(
      "boundary", "print a boundary complex of the input's X");
  boundary_cmd->add_option("input", input)->required();
  boundary_cmd->add_option("--kind", kind, "one, plus or odd");

  CLI::App* subdivide = app.add_subcommand(
      "subdivide", "barycentric subdivision of the pair");
  subdivide->add_option("input", input)->required();
  subdivide->add_option("--iterations", iterations, "number of rounds")
      ->check(CLI::PositiveNumber);

  CLI::App* union_cmd = app.add_subcommand(
      "union-check",
      "sufficient check via a decomposition into pairs of subcomplexes");
  union_cmd->add_option("ambient", input, "the ambient pair")->required();
  union_cmd->add_option("pieces", pieces, "piece pair documents")
      ->required()
      ->expected(-1);
  union_cmd->add_flag("--json", as_json, "emit the structured report");

  CLI::App* gallery_cmd = app.add_subcommand(
      "gallery", "list built-in pairs or print one");
  gallery_cmd->add_option("name", gallery_name,
                          "gallery item, e.g. dunce_hat or star(5)");
  gallery_cmd->add_flag("--emit", emit, "print the pair document");

  app.add_subcommand("self-test",
                     "run the structural self-checks of every gallery item");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(input, as_json, parallel);
    if (check_cone->parsed()) return cmd_check_cone(input, as_json);
    if (link_cmd->parsed()) return cmd_link(input, vertex);
    if (boundary_cmd->parsed()) return cmd_boundary(input, kind);
    if (subdivide->parsed()) return cmd_subdivide(input, iterations);
    if (union_cmd->parsed()) return cmd_union_check(input, pieces, as_json);
    if (gallery_cmd->parsed()) return cmd_gallery(gallery_name, emit);
    return cmd_self_test();
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what()
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
