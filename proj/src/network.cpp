#include "nfc/network.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nfc {

using nlohmann::json;

static void require_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw std::runtime_error("unknown field '" + it.key() + "' in " + where);
  }
  for (const auto& f : allowed) {
    if (!obj.contains(f)) throw std::runtime_error("missing field '" + f + "' in " + where);
  }
}

Network parse_network(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("network file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("network file must be a JSON object");
  require_fields(doc, {"alphabet_size", "nodes", "sources", "sink", "edges"}, "network");

  Network net;
  if (!doc["alphabet_size"].is_number_integer())
    throw std::runtime_error("alphabet_size must be an integer");
  net.q = doc["alphabet_size"].get<int>();

  for (const auto& n : doc["nodes"]) {
    if (!n.is_string()) throw std::runtime_error("node names must be strings");
    net.nodes.push_back(n.get<std::string>());
  }
  for (const auto& s : doc["sources"]) {
    if (!s.is_string()) throw std::runtime_error("source names must be strings");
    net.sources.push_back(s.get<std::string>());
  }
  if (!doc["sink"].is_string()) throw std::runtime_error("sink must be a string");
  net.sink = doc["sink"].get<std::string>();

  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw std::runtime_error("edges must be objects");
    require_fields(e, {"id", "tail", "head"}, "edge");
    net.edges.push_back({e["id"].get<std::string>(), e["tail"].get<std::string>(),
                         e["head"].get<std::string>()});
  }

  // referential integrity before any structural analysis
  std::set<std::string> node_set;
  for (const auto& n : net.nodes) {
    if (!node_set.insert(n).second) throw std::runtime_error("duplicate node '" + n + "'");
  }
  std::set<std::string> src_set;
  for (const auto& s : net.sources) {
    if (!node_set.count(s)) throw std::runtime_error("source '" + s + "' is not a node");
    if (!src_set.insert(s).second) throw std::runtime_error("duplicate source '" + s + "'");
  }
  if (!node_set.count(net.sink)) throw std::runtime_error("sink '" + net.sink + "' is not a node");
  if (src_set.count(net.sink)) throw std::runtime_error("sink cannot be a source");
  std::set<std::string> edge_ids;
  for (const auto& e : net.edges) {
    if (!edge_ids.insert(e.id).second) throw std::runtime_error("duplicate edge id '" + e.id + "'");
    if (!node_set.count(e.tail))
      throw std::runtime_error("edge '" + e.id + "' tail '" + e.tail + "' is not a node");
    if (!node_set.count(e.head))
      throw std::runtime_error("edge '" + e.id + "' head '" + e.head + "' is not a node");
  }

  index_network(net);
  return net;
}

void index_network(Network& net) {
  net.node_index.clear();
  net.edge_index.clear();
  net.source_index.clear();
  for (int i = 0; i < (int)net.nodes.size(); i++) net.node_index[net.nodes[i]] = i;
  for (int i = 0; i < (int)net.edges.size(); i++) net.edge_index[net.edges[i].id] = i;
  for (int i = 0; i < (int)net.sources.size(); i++) net.source_index[net.sources[i]] = i;

  // reflexive-transitive closure; node counts are desk scale so O(V*E) BFS is fine
  int V = (int)net.nodes.size();
  net.reach.assign(V, std::vector<bool>(V, false));
  std::vector<std::vector<int>> adj(V);
  for (const auto& e : net.edges) adj[net.node_index[e.tail]].push_back(net.node_index[e.head]);
  for (int u = 0; u < V; u++) {
    std::queue<int> bfs;
    bfs.push(u);
    net.reach[u][u] = true;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : adj[v])
        if (!net.reach[u][w]) {
          net.reach[u][w] = true;
          bfs.push(w);
        }
    }
  }
}

ValidationReport validate_network(const Network& net) {
  ValidationReport rep;
  if (net.q < 2) rep.issues.push_back({"alphabet", "alphabet_size must be at least 2"});
  if (net.sources.empty()) rep.issues.push_back({"no-sources", "network has no sources"});

  int V = (int)net.nodes.size();
  std::vector<int> indeg(V, 0), outdeg(V, 0);
  for (const auto& e : net.edges) {
    indeg[net.node_index.at(e.head)]++;
    outdeg[net.node_index.at(e.tail)]++;
  }
  for (const auto& s : net.sources) {
    if (indeg[net.node_index.at(s)] > 0)
      rep.issues.push_back({"source-in-edge", "source '" + s + "' has incoming edges"});
  }
  if (outdeg[net.node_index.at(net.sink)] > 0)
    rep.issues.push_back({"sink-out-edge", "sink '" + net.sink + "' has outgoing edges"});

  // cycle check via Kahn count
  {
    std::vector<int> d = indeg;
    std::queue<int> q;
    for (int v = 0; v < V; v++)
      if (d[v] == 0) q.push(v);
    std::vector<std::vector<int>> adj(V);
    for (const auto& e : net.edges) adj[net.node_index.at(e.tail)].push_back(net.node_index.at(e.head));
    int seen = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      seen++;
      for (int w : adj[v])
        if (--d[w] == 0) q.push(w);
    }
    if (seen != V) rep.issues.push_back({"cycle", "graph contains a directed cycle"});
  }

  // every node on some source-to-sink path
  if (rep.ok()) {
    int t = net.node_index.at(net.sink);
    for (int v = 0; v < V; v++) {
      bool from_src = false;
      for (const auto& s : net.sources)
        if (net.reach[net.node_index.at(s)][v]) from_src = true;
      if (!from_src || !net.reach[v][t])
        rep.issues.push_back(
            {"off-path", "node '" + net.nodes[v] + "' is not on a source-to-sink path"});
    }
  }
  return rep;
}

std::vector<int> topo_order(const Network& net) {
  int V = (int)net.nodes.size();
  std::vector<int> indeg(V, 0);
  std::vector<std::vector<int>> adj(V);
  for (const auto& e : net.edges) {
    adj[net.node_index.at(e.tail)].push_back(net.node_index.at(e.head));
    indeg[net.node_index.at(e.head)]++;
  }
  // min-heap on declared node position gives a deterministic order
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < V; v++)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : adj[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if ((int)order.size() != V) throw std::runtime_error("topo_order: graph has a cycle");
  return order;
}

std::vector<int> topo_edge_order(const Network& net) {
  std::vector<int> pos(net.nodes.size());
  auto order = topo_order(net);
  for (int i = 0; i < (int)order.size(); i++) pos[order[i]] = i;
  std::vector<int> es(net.edges.size());
  for (int i = 0; i < (int)es.size(); i++) es[i] = i;
  std::sort(es.begin(), es.end(), [&](int a, int b) {
    int pa = pos[net.node_index.at(net.edges[a].tail)];
    int pb = pos[net.node_index.at(net.edges[b].tail)];
    if (pa != pb) return pa < pb;
    return net.edges[a].id < net.edges[b].id;
  });
  return es;
}

std::vector<int> in_edges(const Network& net, int node) {
  std::vector<int> res;
  for (int i = 0; i < (int)net.edges.size(); i++)
    if (net.node_index.at(net.edges[i].head) == node) res.push_back(i);
  return res;
}

std::string serialize_network(const Network& net) {
  json doc;
  doc["alphabet_size"] = net.q;
  doc["nodes"] = net.nodes;
  doc["sources"] = net.sources;
  doc["sink"] = net.sink;
  doc["edges"] = json::array();
  for (const auto& e : net.edges)
    doc["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  return doc.dump(2);
}

Network load_network(const std::string& json_text) {
  Network net = parse_network(json_text);
  ValidationReport rep = validate_network(net);
  if (!rep.ok()) {
    std::ostringstream msg;
    msg << "invalid network:";
    for (const auto& i : rep.issues) msg << " [" << i.code << "] " << i.detail << ";";
    throw std::runtime_error(msg.str());
  }
  return net;
}

}  // namespace nfc
