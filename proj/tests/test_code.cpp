#include "doctest.h"
#include "helpers.hpp"
#include "nfc/code.hpp"

using namespace nfc;

TEST_CASE("global evaluation of the relay code matches the worked example") {
  Network net = load_network(fixture("n1.json"));
  NetworkCode code = parse_code(fixture("fig8_code.json"));
  // x1 = (1,0)^T, x2 = (0,1)^T
  auto msgs = eval_global(code, net, {{1, 0}, {0, 1}});
  CHECK(msgs["e1"] == std::vector<int>{1});
  CHECK(msgs["e2"] == std::vector<int>{0});
  CHECK(msgs["e3"] == std::vector<int>{1});
  CHECK(msgs["e4"] == std::vector<int>{0});
  CHECK(msgs["e5"] == std::vector<int>{1});
}

TEST_CASE("all-zero inputs keep every reverse-butterfly edge at zero") {
  Network net = load_network(fixture("rev_butterfly.json"));
  NetworkCode code = parse_code(fixture("fig9_code.json"));
  auto msgs = eval_global(code, net, {{0, 0, 0}, {0, 0, 0}});
  for (const auto& [id, w] : msgs)
    for (int v : w) CHECK(v == 0);
}

TEST_CASE("the three reference codes verify ok") {
  CHECK(verify_code(parse_code(fixture("fig8_code.json")), load_network(fixture("n1.json")),
                    make_builtin("max", 2, 2))
            .ok);
  CHECK(verify_code(parse_code(fixture("fig9_code.json")),
                    load_network(fixture("rev_butterfly.json")), make_builtin("max", 2, 2))
            .ok);
  CHECK(verify_code(parse_code(fixture("fig6_code.json")), load_network(fixture("fig1.json")),
                    parse_function(fixture("that_linear.json")))
            .ok);
}

TEST_CASE("shape mismatches are rejected loudly") {
  Network net = load_network(fixture("n1.json"));
  NetworkCode code = parse_code(fixture("fig8_code.json"));
  TargetFunction f = make_builtin("max", 2, 2);
  NetworkCode missing = code;
  missing.edges.erase("e5");
  CHECK_THROWS_AS(verify_code(missing, net, f), std::invalid_argument);
  NetworkCode short_table = code;
  short_table.edges["e1"].table.pop_back();
  CHECK_THROWS_AS(verify_code(short_table, net, f), std::invalid_argument);
  NetworkCode bad_inputs = code;
  bad_inputs.edges["e5"].inputs = {"e2", "e2"};
  CHECK_THROWS_AS(verify_code(bad_inputs, net, f), std::invalid_argument);
}

TEST_CASE("decoder synthesis over the terminal cut of the relay code") {
  Network net = load_network(fixture("n1.json"));
  NetworkCode code = parse_code(fixture("fig8_code.json"));
  TargetFunction f = make_builtin("max", 2, 2);
  std::vector<int> cut = {net.edge_index["e1"], net.edge_index["e4"], net.edge_index["e5"]};
  DecoderSynthesis syn = synthesize_decoder(code, net, f, cut);
  REQUIRE(syn.ok);
  for (int t = 0; t < 8; t++) {
    if (!syn.reached[t]) continue;
    int a = (t >> 2) & 1, b = (t >> 1) & 1, g = t & 1;
    CHECK(syn.table[t] == std::vector<int>{std::max(a, b), g});
  }
}

TEST_CASE("a colliding code yields a failure witness") {
  Network path = load_network(
      R"({"alphabet_size":2,"nodes":["s","v","t"],"sources":["s"],"sink":"t",
          "edges":[{"id":"a","tail":"s","head":"v"},{"id":"b","tail":"v","head":"t"}]})");
  TargetFunction id1 = make_builtin("identity", 1, 2);
  NetworkCode constant;
  constant.k = 1;
  constant.n = 1;
  constant.edges["a"] = {{}, {{0}, {1}}};
  constant.edges["b"] = {{"a"}, {{0}, {0}}};  // collapses everything
  DecoderSynthesis syn =
      synthesize_decoder(constant, path, id1, {path.edge_index["b"]});
  CHECK(!syn.ok);
  CHECK(syn.witness_a != syn.witness_b);
  Verdict v = verify_code(constant, path, id1);
  CHECK(!v.ok);
}

TEST_CASE("induced function across (e1,e5,e4) is (max(y1,y3), y2)") {
  Network net = load_network(fixture("n1.json"));
  NetworkCode code = parse_code(fixture("fig8_code.json"));
  TargetFunction f = make_builtin("max", 2, 2);
  std::vector<int> cut = {net.edge_index["e1"], net.edge_index["e5"], net.edge_index["e4"]};
  TargetFunction F = induce_function(code, net, f, cut);
  CHECK(F.s == 3);
  CHECK(F.q == 2);
  CHECK(F.output_alphabet_size == 4);
  CHECK(F.table == std::vector<int>{0, 2, 1, 3, 2, 2, 3, 3});
}

TEST_CASE("identity routing induces the identity function") {
  Network path = load_network(
      R"({"alphabet_size":2,"nodes":["s","v","t"],"sources":["s"],"sink":"t",
          "edges":[{"id":"a","tail":"s","head":"v"},{"id":"b","tail":"v","head":"t"}]})");
  NetworkCode route;
  route.k = 1;
  route.n = 1;
  route.edges["a"] = {{}, {{0}, {1}}};
  route.edges["b"] = {{"a"}, {{0}, {1}}};
  TargetFunction F =
      induce_function(route, path, make_builtin("identity", 1, 2), {path.edge_index["b"]});
  CHECK(F.table == std::vector<int>{0, 1});
}

TEST_CASE("induction rejects non-global cuts and non-surjective edges") {
  Network net = load_network(fixture("n1.json"));
  NetworkCode code = parse_code(fixture("fig8_code.json"));
  TargetFunction f = make_builtin("max", 2, 2);
  CHECK_THROWS_WITH_AS(induce_function(code, net, f, {net.edge_index["e5"]}),
                       "cut is not global", std::runtime_error);
  // make e5 constant: still a valid shape, but no longer surjective
  NetworkCode flat = code;
  flat.edges["e5"].table = {{0}, {0}, {0}, {0}};
  CHECK_THROWS(induce_function(flat, net, f,
                               {net.edge_index["e1"], net.edge_index["e5"], net.edge_index["e4"]}));
}

TEST_CASE("rate-2 structure report on the relay code") {
  Network net = load_network(fixture("n1.json"));
  NetworkCode code = parse_code(fixture("fig8_code.json"));
  Rate2Report rep = check_rate2_structure(code, net);
  CHECK(rep.shape_ok);
  CHECK(rep.bij12);
  CHECK(rep.bij34);
  for (bool s : rep.surjective) CHECK(s);
  CHECK(rep.fibers_ok);

  // swapping the two symbols sent by the right source keeps the structure
  NetworkCode swapped = code;
  std::swap(swapped.edges["e3"].table, swapped.edges["e4"].table);
  Rate2Report rep2 = check_rate2_structure(swapped, net);
  CHECK(rep2.bij34);
  CHECK(rep2.fibers_ok);

  // a (3,2) code is rejected by the k = 2n gate
  NetworkCode fig9 = parse_code(fixture("fig9_code.json"));
  CHECK_THROWS_AS(check_rate2_structure(fig9, load_network(fixture("rev_butterfly.json"))),
                  std::invalid_argument);
}

TEST_CASE("messages depend only on sources reaching the tail") {
  Network net = load_network(fixture("rev_butterfly.json"));
  NetworkCode code = parse_code(fixture("fig9_code.json"));
  // e2 originates at s1: perturbing s2 must not change it (and vice versa)
  auto a = eval_global(code, net, {{1, 0, 1}, {0, 0, 0}});
  auto b = eval_global(code, net, {{1, 0, 1}, {1, 1, 1}});
  CHECK(a["e1"] == b["e1"]);
  CHECK(a["e2"] == b["e2"]);
  auto c = eval_global(code, net, {{0, 0, 0}, {1, 1, 0}});
  auto d = eval_global(code, net, {{1, 1, 1}, {1, 1, 0}});
  CHECK(c["e3"] == d["e3"]);
  CHECK(c["e4"] == d["e4"]);
}

TEST_CASE("code files round-trip") {
  NetworkCode code = parse_code(fixture("fig9_code.json"));
  NetworkCode again = parse_code(serialize_code(code));
  CHECK(again.k == code.k);
  CHECK(again.n == code.n);
  CHECK(again.edges.size() == code.edges.size());
  for (const auto& [id, lf] : code.edges) {
    CHECK(again.edges.at(id).inputs == lf.inputs);
    CHECK(again.edges.at(id).table == lf.table);
  }
  REQUIRE(again.decoder);
  CHECK(again.decoder->table == code.decoder->table);
}

TEST_CASE("every global cut of a correct code admits a decoder") {
  Network net = load_network(fixture("n1.json"));
  NetworkCode code = parse_code(fixture("fig8_code.json"));
  TargetFunction f = make_builtin("max", 2, 2);
  for (const auto& ctx : enumerate_cuts(net)) {
    if (!ctx.is_global(net)) continue;
    CHECK(synthesize_decoder(code, net, f, mask_elements(ctx.cut)).ok);
  }
}
