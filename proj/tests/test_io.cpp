#include <doctest.h>

#include "sct/io.hpp"

using namespace sct;

TEST_CASE("parsing the documented examples") {
  PairDocument tri = parse_pair_document(
      R"({"name":"triangle-pair","X":[[0,1,2]],"A":[[0,1],[1,2],[0,2]]})");
  CHECK(tri.name == "triangle-pair");
  CHECK(tri.pair.X().size() == 7);
  CHECK(tri.pair.A().size() == 6);
  CHECK(has_empty_interior(tri.pair));

  PairDocument segment = parse_pair_document(R"({"X":[[0,1]],"A":[]})");
  CHECK(segment.pair.X().size() == 3);
  CHECK(segment.pair.A().empty());

  CHECK_THROWS_AS(parse_pair_document(R"({"X":[[0,1]],"A":[[2]]})"), Error);
}

TEST_CASE("parse errors carry a reason") {
  CHECK_THROWS_AS(parse_pair_document("{"), Error);
  CHECK_THROWS_AS(parse_pair_document("[]"), Error);
  CHECK_THROWS_AS(parse_pair_document(R"({"A":[[0]]})"), Error);
  CHECK_THROWS_AS(parse_pair_document(R"({"X":[[0,0]]})"), Error);
  CHECK_THROWS_AS(parse_pair_document(R"({"X":[[-1,0]]})"), Error);
  CHECK_THROWS_AS(parse_pair_document(R"({"X":[["a"]]})"), Error);
}

TEST_CASE("named vertices resolve through the label table") {
  PairDocument doc = parse_pair_document(
      R"({"vertices":["left","right","top"],"X":[["left","right","top"]],"A":[["left","right"]]})");
  CHECK(doc.pair.X().contains(Simplex{0, 1, 2}));
  CHECK(doc.pair.A().contains(Simplex{0, 1}));
}

TEST_CASE("serialize then parse is the identity and bytes are canonical") {
  PairDocument doc = parse_pair_document(
      R"({"X":[[2,1,0],[2,3]],"A":[[0,1]]})");
  std::string first = serialize_pair_document(doc.pair);
  PairDocument round = parse_pair_document(first);
  CHECK(round.pair == doc.pair);
  CHECK(serialize_pair_document(round.pair) == first);

  // Listing generators in any order yields byte-identical documents.
  PairDocument shuffled = parse_pair_document(
      R"({"X":[[3,2],[0,1,2]],"A":[[1,0]]})");
  CHECK(serialize_pair_document(shuffled.pair) == first);
}

TEST_CASE("digest is stable") {
  std::string doc = serialize_pair_document(
      parse_pair_document(R"({"X":[[0,1,2]]})").pair);
  CHECK(input_digest(doc) == input_digest(doc));
  CHECK(input_digest(doc).substr(0, 8) == "fnv1a64:");
  CHECK(input_digest(doc) != input_digest(doc + " "));
}

TEST_CASE("reports round-trip losslessly") {
  NamedPair dunce = generate("dunce_hat");
  Verdict v = computable_type(dunce.pair);
  Report r = make_report(dunce.pair, v, "gallery:dunce_hat");
  nlohmann::json j = report_to_json(r);
  Report back = report_from_json(j);
  CHECK(back == r);
  CHECK(report_to_json(back).dump() == j.dump());

  NamedPair star = generate("star(3)");
  Report r2 = make_report(star.pair, computable_type(star.pair), "star");
  CHECK(report_from_json(report_to_json(r2)) == r2);
}

TEST_CASE("exit codes follow the overall verdict") {
  CHECK(exit_code_for(computable_type(generate("bing_house").pair)) == 0);
  CHECK(exit_code_for(computable_type(generate("dunce_hat").pair)) == 1);
  Complex edge = closure({Simplex{0, 1}});
  CHECK(exit_code_for(computable_type(Pair(edge, edge))) == 2);
}

TEST_CASE("reports for the same input are byte-identical across runs") {
  NamedPair bing = generate("bing_house");
  auto render = [&](bool parallel) {
    Verdict v = computable_type(bing.pair, DecisionOptions{parallel});
    return report_to_json(make_report(bing.pair, v, "gallery:bing_house"))
        .dump();
  };
  std::string first = render(false);
  CHECK(render(false) == first);
  CHECK(render(true) == first);
}

TEST_CASE("human report names the failing edge, terminals and component") {
  NamedPair dunce = generate("dunce_hat");
  Report r = make_report(dunce.pair, computable_type(dunce.pair),
                         "gallery:dunce_hat");
  std::string text = render_human_report(r);
  CHECK(text.find("NotComputableType") != std::string::npos);
  CHECK(text.find("vertex 0: FAIL") != std::string::npos);
  CHECK(text.find("not on a cycle or an N-to-N path") != std::string::npos);
  CHECK(text.find("N = {}") != std::string::npos);
  CHECK(render_human_report(r) == text);  // deterministic
}
