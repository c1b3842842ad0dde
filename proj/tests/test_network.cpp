#include "doctest.h"
#include "helpers.hpp"
#include "nfc/network.hpp"

using namespace nfc;

TEST_CASE("fig1 network parses and validates") {
  Network net = parse_network(fixture("fig1.json"));
  CHECK(validate_network(net).ok());
  CHECK(net.q == 2);
  CHECK(net.num_sources() == 3);
  CHECK(net.num_edges() == 6);
  CHECK(net.sink == "rho");
}

TEST_CASE("reachability matches a brute-force closure") {
  for (const char* file : {"fig1.json", "rev_butterfly.json", "n1.json", "n2.json"}) {
    Network net = parse_network(fixture(file));
    int V = (int)net.nodes.size();
    // independent oracle: boolean matrix powering (Floyd-Warshall closure)
    std::vector<std::vector<bool>> r(V, std::vector<bool>(V, false));
    for (int v = 0; v < V; v++) r[v][v] = true;
    for (const auto& e : net.edges) r[net.node_index[e.tail]][net.node_index[e.head]] = true;
    for (int k = 0; k < V; k++)
      for (int i = 0; i < V; i++)
        for (int j = 0; j < V; j++)
          if (r[i][k] && r[k][j]) r[i][j] = true;
    for (int i = 0; i < V; i++)
      for (int j = 0; j < V; j++) CHECK(net.reaches(i, j) == r[i][j]);
  }
}

TEST_CASE("topological orders respect edges and are deterministic") {
  Network net = parse_network(fixture("rev_butterfly.json"));
  auto order = topo_order(net);
  std::vector<int> pos(net.nodes.size());
  for (int i = 0; i < (int)order.size(); i++) pos[order[i]] = i;
  for (const auto& e : net.edges)
    CHECK(pos[net.node_index[e.tail]] < pos[net.node_index[e.head]]);
  auto eo = topo_edge_order(net);
  for (std::size_t i = 0; i + 1 < eo.size(); i++) {
    int pa = pos[net.node_index[net.edges[eo[i]].tail]];
    int pb = pos[net.node_index[net.edges[eo[i + 1]].tail]];
    CHECK(pa <= pb);
  }
}

TEST_CASE("in_edges of the sink") {
  Network net = parse_network(fixture("fig1.json"));
  auto in = in_edges(net, net.node_index["rho"]);
  REQUIRE(in.size() == 2);
  CHECK(net.edges[in[0]].id == "e5");
  CHECK(net.edges[in[1]].id == "e6");
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS(parse_network("not json"));
  CHECK_THROWS(parse_network(R"({"alphabet_size":2})"));  // missing fields
  CHECK_THROWS(parse_network(
      R"({"alphabet_size":2,"nodes":["a","b"],"sources":["a"],"sink":"b","edges":[],"extra":1})"));
  CHECK_THROWS(parse_network(
      R"({"alphabet_size":2,"nodes":["a","b"],"sources":["a"],"sink":"b",
          "edges":[{"id":"e1","tail":"a","head":"c"}]})"));  // dangling head
  CHECK_THROWS(parse_network(
      R"({"alphabet_size":2,"nodes":["a","b"],"sources":["a"],"sink":"b",
          "edges":[{"id":"e1","tail":"a","head":"b"},{"id":"e1","tail":"a","head":"b"}]})"));
}

TEST_CASE("structural violations are reported") {
  // cycle through two intermediate nodes
  Network cyc = parse_network(
      R"({"alphabet_size":2,"nodes":["s","u","v","t"],"sources":["s"],"sink":"t",
          "edges":[{"id":"e1","tail":"s","head":"u"},{"id":"e2","tail":"u","head":"v"},
                   {"id":"e3","tail":"v","head":"u"},{"id":"e4","tail":"v","head":"t"}]})");
  auto rep = validate_network(cyc);
  CHECK(!rep.ok());
  bool has_cycle = false;
  for (const auto& i : rep.issues) has_cycle |= i.code == "cycle";
  CHECK(has_cycle);

  // source with an incoming edge
  Network sin = parse_network(
      R"({"alphabet_size":2,"nodes":["s","u","t"],"sources":["s"],"sink":"t",
          "edges":[{"id":"e1","tail":"s","head":"u"},{"id":"e2","tail":"u","head":"t"},
                   {"id":"e3","tail":"u","head":"s"}]})");
  CHECK(!validate_network(sin).ok());

  // node off every source-to-sink path
  Network off = parse_network(
      R"({"alphabet_size":2,"nodes":["s","u","t"],"sources":["s"],"sink":"t",
          "edges":[{"id":"e1","tail":"s","head":"t"},{"id":"e2","tail":"s","head":"u"}]})");
  CHECK(!validate_network(off).ok());

  // alphabet too small
  Network alpha = parse_network(
      R"({"alphabet_size":1,"nodes":["s","t"],"sources":["s"],"sink":"t",
          "edges":[{"id":"e1","tail":"s","head":"t"}]})");
  CHECK(!validate_network(alpha).ok());
}

TEST_CASE("serialization round-trips") {
  Network net = parse_network(fixture("fig1.json"));
  Network again = parse_network(serialize_network(net));
  CHECK(serialize_network(again) == serialize_network(net));
  CHECK(again.nodes == net.nodes);
  CHECK(again.sources == net.sources);
}
