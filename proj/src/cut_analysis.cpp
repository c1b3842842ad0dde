#include "nfc/cut_analysis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nfc {

std::vector<int> mask_elements(std::uint32_t m) {
  std::vector<int> out;
  for (int i = 0; m >> i; i++)
    if ((m >> i) & 1) out.push_back(i);
  return out;
}

SourceSet separated_sources(const Network& net, EdgeSet C) {
  // reachability to the sink with the cut edges removed (DFS per source)
  int V = (int)net.nodes.size();
  std::vector<std::vector<int>> adj(V);
  for (int i = 0; i < net.num_edges(); i++) {
    if ((C >> i) & 1) continue;
    adj[net.node_index.at(net.edges[i].tail)].push_back(net.node_index.at(net.edges[i].head));
  }
  int sink = net.node_index.at(net.sink);
  std::vector<char> hits(V, 0), seen(V, 0);
  // reverse search from the sink is one pass instead of one per source
  std::vector<std::vector<int>> radj(V);
  for (int v = 0; v < V; v++)
    for (int w : adj[v]) radj[w].push_back(v);
  std::vector<int> stack{sink};
  seen[sink] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    hits[v] = 1;
    for (int w : radj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  SourceSet I = 0;
  for (int i = 0; i < net.num_sources(); i++)
    if (!hits[net.node_index.at(net.sources[i])]) I |= SourceSet(1) << i;
  return I;
}

SourceSet reaching_sources(const Network& net, EdgeSet C) {
  SourceSet K = 0;
  for (int i = 0; i < net.num_sources(); i++) {
    int s = net.node_index.at(net.sources[i]);
    for (int e = 0; e < net.num_edges(); e++) {
      if (!((C >> e) & 1)) continue;
      if (net.reaches(s, net.node_index.at(net.edges[e].tail))) {
        K |= SourceSet(1) << i;
        break;
      }
    }
  }
  return K;
}

CutContext make_cut_context(const Network& net, EdgeSet C) {
  CutContext ctx;
  ctx.cut = C;
  ctx.I = separated_sources(net, C);
  if (ctx.I == 0) throw std::runtime_error("edge set is not a cut set (no source separated)");
  ctx.K = reaching_sources(net, C);
  ctx.J = ctx.K & ~ctx.I;
  return ctx;
}

std::vector<CutContext> enumerate_cuts(const Network& net, std::optional<int> max_size,
                                       int edge_limit) {
  int E = net.num_edges();
  if (E > edge_limit)
    throw std::runtime_error("edge count exceeds the cut enumeration limit (" +
                             std::to_string(edge_limit) + ")");
  // edge indices sorted by id, so combinations come out in lexicographic id order
  std::vector<int> by_id(E);
  for (int i = 0; i < E; i++) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(),
            [&](int a, int b) { return net.edges[a].id < net.edges[b].id; });

  int top = max_size ? std::min(*max_size, E) : E;
  std::vector<CutContext> out;
  std::vector<int> comb;
  auto emit = [&]() {
    EdgeSet C = 0;
    for (int pos : comb) C |= EdgeSet(1) << by_id[pos];
    SourceSet I = separated_sources(net, C);
    if (I == 0) return;
    CutContext ctx;
    ctx.cut = C;
    ctx.I = I;
    ctx.K = reaching_sources(net, C);
    ctx.J = ctx.K & ~ctx.I;
    out.push_back(ctx);
  };
  for (int k = 1; k <= top; k++) {
    comb.assign(k, 0);
    for (int i = 0; i < k; i++) comb[i] = i;
    while (true) {
      emit();
      int i = k - 1;
      while (i >= 0 && comb[i] == E - k + i) i--;
      if (i < 0) break;
      comb[i]++;
      for (int j = i + 1; j < k; j++) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

std::vector<StrongPartition> enumerate_strong_partitions(const Network& net,
                                                         const CutContext& ctx) {
  // elements in edge-id order so blocks keyed by first element are canonical
  std::vector<int> elems = mask_elements(ctx.cut);
  std::sort(elems.begin(), elems.end(),
            [&](int a, int b) { return net.edges[a].id < net.edges[b].id; });
  int n = (int)elems.size();

  std::vector<StrongPartition> out;
  std::vector<std::vector<int>> blocks;
  // restricted-growth enumeration of set partitions
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      StrongPartition sp;
      SourceSet used = 0;
      for (const auto& b : blocks) {
        EdgeSet mask = 0;
        for (int e : b) mask |= EdgeSet(1) << e;
        SourceSet I_l = separated_sources(net, mask);
        if (I_l == 0) return;          // condition (1)
        if (I_l & used) return;        // condition (2)
        used |= I_l;
        sp.blocks.push_back(mask);
        sp.block_I.push_back(I_l);
      }
      sp.L = ctx.I & ~used;
      out.push_back(sp);
      return;
    }
    size_t existing = blocks.size();  // recursion grows the vector; don't hold references
    for (size_t j = 0; j < existing; j++) {
      blocks[j].push_back(elems[i]);
      rec(i + 1);
      blocks[j].pop_back();
    }
    blocks.push_back({elems[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);

  auto key = [&](const StrongPartition& sp) {
    std::vector<std::vector<std::string>> k;
    for (EdgeSet b : sp.blocks) k.push_back(cut_edge_ids(net, b));
    return k;
  };
  std::sort(out.begin(), out.end(),
            [&](const StrongPartition& a, const StrongPartition& b) { return key(a) < key(b); });
  return out;
}

RationalMinCut min_cut_linear(const Network& net, const LinearSpec& spec) {
  if ((int)spec.matrix[0].size() != net.num_sources())
    throw std::runtime_error("linear matrix arity does not match the source count");
  RationalMinCut best;
  for (const auto& ctx : enumerate_cuts(net)) {
    std::vector<std::vector<int>> cols;
    for (const auto& row : spec.matrix) {
      std::vector<int> r;
      for (int i : mask_elements(ctx.I)) r.push_back(row[i]);
      cols.push_back(r);
    }
    int rank = rank_over_prime_field(cols, spec.q);
    if (rank == 0) continue;  // non-constraining cut
    int size = popcount(ctx.cut);
    // first strictly better ratio wins; enumeration order breaks ties
    if (best.den == 0 || (long long)size * best.den < (long long)best.num * rank) {
      best.num = size;
      best.den = rank;
      best.argmin = ctx.cut;
    }
  }
  if (best.den == 0) throw std::runtime_error("no constraining cut for the linear function");
  return best;
}

std::vector<std::string> cut_edge_ids(const Network& net, EdgeSet C) {
  std::vector<std::string> ids;
  for (int e : mask_elements(C)) ids.push_back(net.edges[e].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

EdgeSet edge_set_from_ids(const Network& net, const std::vector<std::string>& ids) {
  EdgeSet C = 0;
  for (const auto& id : ids) {
    auto it = net.edge_index.find(id);
    if (it == net.edge_index.end()) throw std::runtime_error("unknown edge id '" + id + "'");
    C |= EdgeSet(1) << it->second;
  }
  return C;
}

}  // namespace nfc
