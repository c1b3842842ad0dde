#ifndef NFC_NETWORK_HPP
#define NFC_NETWORK_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace nfc {

// Source and edge subsets as bitmasks over the validated network's index order.
using SourceSet = std::uint32_t;
using EdgeSet = std::uint32_t;

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
};

// Single-sink directed acyclic multigraph with ordered sources and alphabet size q.
struct Network {
  int q = 0;
  std::vector<std::string> nodes;
  std::vector<std::string> sources;  // sigma_1, sigma_2, ... in declared order
  std::string sink;
  std::vector<Edge> edges;  // declared order; edge indices refer to this vector

  std::unordered_map<std::string, int> node_index;
  std::unordered_map<std::string, int> edge_index;
  std::unordered_map<std::string, int> source_index;  // node name -> 0-based source position

  // reach[u][v] true iff there is a directed path u -> v (reflexive)
  std::vector<std::vector<bool>> reach;

  int num_sources() const { return (int)sources.size(); }
  int num_edges() const { return (int)edges.size(); }
  bool reaches(int u, int v) const { return reach[u][v]; }
};

struct ValidationIssue {
  std::string code;  // e.g. "cycle", "source-in-edge", "unreachable-sink"
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Parse a network JSON document. Throws std::runtime_error on malformed input
// (bad JSON, unknown fields, missing fields, duplicate ids, dangling references).
Network parse_network(const std::string& json_text);

// Structural checks: acyclicity, sources have no in-edges, sink has no out-edges,
// every node lies on some source-to-sink path, alphabet size >= 2, at least one source.
ValidationReport validate_network(const Network& net);

// Fills node_index/edge_index/source_index and the reachability closure.
// Must be called after construction and before reaches()/topo queries.
void index_network(Network& net);

// Deterministic topological node order: repeatedly remove the in-degree-0 node
// with the smallest declared position. Throws if the graph has a cycle.
std::vector<int> topo_order(const Network& net);

// Edges sorted by topological position of their tail, ties by edge id.
std::vector<int> topo_edge_order(const Network& net);

// In-edges of a node in declared edge order.
std::vector<int> in_edges(const Network& net, int node);

// Canonical serialization (fixed field order, declared node/edge order).
std::string serialize_network(const Network& net);

// Convenience: parse + index + validate; throws on validation failure.
Network load_network(const std::string& json_text);

}  // namespace nfc

#endif
