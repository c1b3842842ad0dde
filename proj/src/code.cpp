#include "nfc/code.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "nfc/equivalence.hpp"

namespace nfc {

// ---------------------------------------------------------------------------
// compiled form: tables resolved to word indices, edges in topological order
// ---------------------------------------------------------------------------

namespace {

struct Slot {
  int edge = -1;                   // index into net.edges
  bool is_source = false;
  int src = -1;                    // source position for source edges
  std::vector<int> input_depths;   // depths of the declared inputs, declared order
  std::vector<int> table;          // entry -> word index in [0, V)
  int entries = 0;
};

struct Compiled {
  int k = 0, n = 0, q = 0;
  int V = 0;            // q^n distinct words
  std::uint64_t M = 0;  // q^{k s} source matrices
  std::vector<int> eo;
  std::vector<int> depth_of;                // edge index -> depth
  std::vector<Slot> slots;                  // by depth
  std::vector<std::vector<int>> svec;       // [m][source] vector index in [0, q^k)
};

const std::uint64_t kMatrixLimit = 1u << 20;

std::uint64_t word_index(const std::vector<int>& w, int q, int n) {
  if ((int)w.size() != n) throw std::invalid_argument("message word is not n symbols long");
  for (int v : w)
    if (v < 0 || v >= q) throw std::invalid_argument("message symbol outside the alphabet");
  return tuple_index(w, q);
}

// topology + shape scaffold shared by evaluation and search; when `code` is
// null the tables stay empty and inputs default to declared in-edge order
Compiled compile(const Network& net, int k, int n, const NetworkCode* code) {
  if (k < 1 || n < 1) throw std::invalid_argument("code requires k >= 1 and n >= 1");
  Compiled cc;
  cc.k = k;
  cc.n = n;
  cc.q = net.q;
  std::uint64_t V = pow_u64(net.q, n);
  std::uint64_t vk = pow_u64(net.q, k);
  if (V > 1u << 15 || vk > 1u << 15) throw std::runtime_error("word space exceeds the limit");
  cc.V = (int)V;
  cc.M = pow_u64(vk, net.num_sources());
  if (cc.M > kMatrixLimit) throw std::runtime_error("source matrix space exceeds the limit");

  cc.eo = topo_edge_order(net);
  cc.depth_of.assign(net.num_edges(), -1);
  for (int d = 0; d < (int)cc.eo.size(); d++) cc.depth_of[cc.eo[d]] = d;

  if (code && (int)code->edges.size() != net.num_edges())
    throw std::invalid_argument("code must define exactly one local function per edge");

  for (int d = 0; d < (int)cc.eo.size(); d++) {
    int e = cc.eo[d];
    const Edge& edge = net.edges[e];
    Slot slot;
    slot.edge = e;
    auto src_it = net.source_index.find(edge.tail);
    slot.is_source = src_it != net.source_index.end();
    std::vector<int> tail_in = in_edges(net, net.node_index.at(edge.tail));
    if (slot.is_source) {
      slot.src = src_it->second;
      slot.entries = (int)vk;
    } else {
      for (int ie : tail_in) slot.input_depths.push_back(cc.depth_of[ie]);
      slot.entries = (int)pow_u64(cc.V, tail_in.size());
    }
    if (code) {
      auto it = code->edges.find(edge.id);
      if (it == code->edges.end())
        throw std::invalid_argument("code has no local function for edge '" + edge.id + "'");
      const LocalFunction& lf = it->second;
      if (slot.is_source) {
        if (!lf.inputs.empty())
          throw std::invalid_argument("source edge '" + edge.id + "' must not declare inputs");
      } else {
        std::set<int> declared, actual(tail_in.begin(), tail_in.end());
        slot.input_depths.clear();
        for (const auto& id : lf.inputs) {
          auto ei = net.edge_index.find(id);
          if (ei == net.edge_index.end())
            throw std::invalid_argument("unknown input edge '" + id + "'");
          declared.insert(ei->second);
          slot.input_depths.push_back(cc.depth_of[ei->second]);
        }
        if (declared != actual || declared.size() != lf.inputs.size())
          throw std::invalid_argument("edge '" + edge.id +
                                      "' inputs must be exactly the in-edges of its tail");
      }
      if ((int)lf.table.size() != slot.entries)
        throw std::invalid_argument("edge '" + edge.id + "' table has the wrong length");
      for (const auto& w : lf.table) slot.table.push_back((int)word_index(w, net.q, n));
    }
    cc.slots.push_back(slot);
  }

  cc.svec.assign(cc.M, std::vector<int>(net.num_sources()));
  for (std::uint64_t m = 0; m < cc.M; m++) {
    std::uint64_t rem = m;
    for (int i = net.num_sources() - 1; i >= 0; i--) {
      cc.svec[m][i] = (int)(rem % vk);
      rem /= vk;
    }
  }
  return cc;
}

// messages for every edge (by depth) over every source matrix
std::vector<std::vector<int>> eval_all(const Compiled& cc) {
  std::vector<std::vector<int>> msg(cc.slots.size(), std::vector<int>(cc.M));
  for (int d = 0; d < (int)cc.slots.size(); d++) {
    const Slot& slot = cc.slots[d];
    for (std::uint64_t m = 0; m < cc.M; m++) {
      std::uint64_t idx;
      if (slot.is_source) {
        idx = cc.svec[m][slot.src];
      } else {
        idx = 0;
        for (int in_d : slot.input_depths) idx = idx * cc.V + msg[in_d][m];
      }
      msg[d][m] = slot.table[idx];
    }
  }
  return msg;
}

// expected outputs: f applied row-wise, encoded mixed-radix over the output
// alphabet with the first row most significant
std::vector<int> expected_outputs(const Compiled& cc, const Network& net,
                                  const TargetFunction& f) {
  if (f.s != net.num_sources() || f.q != net.q)
    throw std::invalid_argument("target function shape does not match the network");
  std::vector<int> fexp(cc.M);
  for (std::uint64_t m = 0; m < cc.M; m++) {
    std::vector<int> out(cc.k);
    for (int r = 0; r < cc.k; r++) {
      std::vector<int> row(f.s);
      for (int i = 0; i < f.s; i++)
        row[i] = index_tuple(cc.svec[m][i], cc.q, cc.k)[r];
      out[r] = f.eval(row);
    }
    fexp[m] = (int)tuple_index(out, f.output_alphabet_size);
  }
  return fexp;
}

SourceMatrix matrix_of(const Compiled& cc, std::uint64_t m, int s) {
  SourceMatrix x(s);
  for (int i = 0; i < s; i++) x[i] = index_tuple(cc.svec[m][i], cc.q, cc.k);
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// evaluation / verification / induction
// ---------------------------------------------------------------------------

std::map<std::string, std::vector<int>> eval_global(const NetworkCode& code, const Network& net,
                                                    const SourceMatrix& x) {
  Compiled cc = compile(net, code.k, code.n, &code);
  if ((int)x.size() != net.num_sources())
    throw std::invalid_argument("source matrix has the wrong number of columns");
  std::uint64_t m = 0;
  std::uint64_t vk = pow_u64(net.q, code.k);
  for (const auto& col : x) {
    if ((int)col.size() != code.k)
      throw std::invalid_argument("source column is not k symbols long");
    m = m * vk + word_index(col, net.q, code.k);
  }
  std::vector<int> word(cc.slots.size());
  for (int d = 0; d < (int)cc.slots.size(); d++) {
    const Slot& slot = cc.slots[d];
    std::uint64_t idx;
    if (slot.is_source) {
      idx = cc.svec[m][slot.src];
    } else {
      idx = 0;
      for (int in_d : slot.input_depths) idx = idx * cc.V + word[in_d];
    }
    word[d] = slot.table[idx];
  }
  std::map<std::string, std::vector<int>> out;
  for (int d = 0; d < (int)cc.slots.size(); d++)
    out[net.edges[cc.slots[d].edge].id] = index_tuple(word[d], net.q, code.n);
  return out;
}

DecoderSynthesis synthesize_decoder(const NetworkCode& code, const Network& net,
                                    const TargetFunction& f, const std::vector<int>& cut_edges) {
  EdgeSet C = 0;
  for (int e : cut_edges) C |= EdgeSet(1) << e;
  SourceSet all = (SourceSet(1) << net.num_sources()) - 1;
  if (separated_sources(net, C) != all) throw std::runtime_error("cut is not global");

  Compiled cc = compile(net, code.k, code.n, &code);
  std::vector<int> fexp = expected_outputs(cc, net, f);
  auto msg = eval_all(cc);

  std::uint64_t space = pow_u64(cc.V, cut_edges.size());
  if (space > 1u << 20) throw std::runtime_error("decoder table exceeds the size limit");
  DecoderSynthesis syn;
  syn.ok = true;
  syn.table.assign(space, std::vector<int>(cc.k, 0));  // fill value: output index 0
  syn.reached.assign(space, 0);
  std::vector<std::uint64_t> assigner(space, 0);
  for (std::uint64_t m = 0; m < cc.M; m++) {
    std::uint64_t t = 0;
    for (int e : cut_edges) t = t * cc.V + msg[cc.depth_of[e]][m];
    int val = fexp[m];
    if (!syn.reached[t]) {
      syn.reached[t] = 1;
      syn.table[t] = index_tuple(val, f.output_alphabet_size, cc.k);
      assigner[t] = m;
    } else if (syn.table[t] != index_tuple(val, f.output_alphabet_size, cc.k)) {
      syn.ok = false;
      syn.witness_a = matrix_of(cc, assigner[t], net.num_sources());
      syn.witness_b = matrix_of(cc, m, net.num_sources());
      return syn;
    }
  }
  return syn;
}

Verdict verify_code(const NetworkCode& code, const Network& net, const TargetFunction& f) {
  Compiled cc = compile(net, code.k, code.n, &code);
  std::vector<int> fexp = expected_outputs(cc, net, f);
  auto msg = eval_all(cc);
  std::vector<int> sink_in = in_edges(net, net.node_index.at(net.sink));

  Verdict v;
  if (code.decoder) {
    const Decoder& dec = *code.decoder;
    std::set<int> declared, actual(sink_in.begin(), sink_in.end());
    std::vector<int> order;
    for (const auto& id : dec.inputs) {
      auto it = net.edge_index.find(id);
      if (it == net.edge_index.end())
        throw std::invalid_argument("decoder input '" + id + "' is not an edge");
      declared.insert(it->second);
      order.push_back(it->second);
    }
    if (declared != actual || declared.size() != dec.inputs.size())
      throw std::invalid_argument("decoder inputs must be exactly the in-edges of the sink");
    if (dec.table.size() != pow_u64(cc.V, order.size()))
      throw std::invalid_argument("decoder table has the wrong length");
    for (const auto& entry : dec.table) {
      if ((int)entry.size() != cc.k)
        throw std::invalid_argument("decoder entry is not k symbols long");
      for (int s : entry)
        if (s < 0 || s >= f.output_alphabet_size)
          throw std::invalid_argument("decoder output symbol outside the output alphabet");
    }
    for (std::uint64_t m = 0; m < cc.M; m++) {
      std::uint64_t t = 0;
      for (int e : order) t = t * cc.V + msg[cc.depth_of[e]][m];
      int got = (int)tuple_index(dec.table[t], f.output_alphabet_size);
      if (got != fexp[m]) {
        v.ok = false;
        v.counterexample = matrix_of(cc, m, net.num_sources());
        v.expected = index_tuple(fexp[m], f.output_alphabet_size, cc.k);
        v.decoded = dec.table[t];
        v.reason = "decoder output differs from f";
        return v;
      }
    }
    v.ok = true;
    return v;
  }

  // no decoder supplied: the code computes f iff the sink map is single-valued
  DecoderSynthesis syn = synthesize_decoder(code, net, f, sink_in);
  if (!syn.ok) {
    v.ok = false;
    v.counterexample = syn.witness_a;
    auto cols = syn.witness_b;
    v.reason = "decoder inconsistency: two source matrices with equal sink messages "
               "but different function values";
    // report f on both members of the witness pair
    v.expected.clear();
    v.decoded.clear();
    auto enc_of = [&](const SourceMatrix& x) {
      std::vector<int> out(cc.k);
      for (int r = 0; r < cc.k; r++) {
        std::vector<int> row(f.s);
        for (int i = 0; i < f.s; i++) row[i] = x[i][r];
        out[r] = f.eval(row);
      }
      return out;
    };
    v.expected = enc_of(syn.witness_a);
    v.decoded = enc_of(syn.witness_b);
    return v;
  }
  v.ok = true;
  return v;
}

TargetFunction induce_function(const NetworkCode& code, const Network& net,
                               const TargetFunction& f, const std::vector<int>& cut_edges) {
  DecoderSynthesis syn = synthesize_decoder(code, net, f, cut_edges);
  if (!syn.ok) throw std::runtime_error("induced function is ill-defined (decoder conflict)");

  Compiled cc = compile(net, code.k, code.n, &code);
  auto msg = eval_all(cc);
  for (int e : cut_edges) {
    std::set<int> seen(msg[cc.depth_of[e]].begin(), msg[cc.depth_of[e]].end());
    if ((int)seen.size() != cc.V)
      throw std::runtime_error("cut edge '" + net.edges[e].id +
                               "' is not surjective onto A^n; the induced function would be partial");
  }

  TargetFunction F;
  F.s = (int)cut_edges.size();
  F.q = cc.V;
  F.output_alphabet_size = (int)pow_u64(f.output_alphabet_size, cc.k);
  F.table.resize(syn.table.size());
  for (std::size_t t = 0; t < syn.table.size(); t++)
    F.table[t] = (int)tuple_index(syn.table[t], f.output_alphabet_size);
  return F;
}

Rate2Report check_rate2_structure(const NetworkCode& code, const Network& net) {
  if (code.k != 2 * code.n)
    throw std::invalid_argument("check_rate2_structure requires a (2n,n) code");
  if (net.num_sources() != 2 || net.num_edges() != 5 || (int)net.nodes.size() != 4)
    throw std::invalid_argument("check_rate2_structure requires the two-source relay shape");

  int s0 = net.node_index.at(net.sources[0]);
  int s1 = net.node_index.at(net.sources[1]);
  int sink = net.node_index.at(net.sink);
  int mid = -1;
  for (int v = 0; v < (int)net.nodes.size(); v++)
    if (v != s0 && v != s1 && v != sink) mid = v;

  // role edges g1..g5
  int g[5] = {-1, -1, -1, -1, -1};
  for (int e = 0; e < net.num_edges(); e++) {
    int t = net.node_index.at(net.edges[e].tail), h = net.node_index.at(net.edges[e].head);
    int role = -1;
    if (t == s0 && h == sink) role = 0;
    else if (t == s0 && h == mid) role = 1;
    else if (t == s1 && h == mid) role = 2;
    else if (t == s1 && h == sink) role = 3;
    else if (t == mid && h == sink) role = 4;
    if (role < 0 || g[role] >= 0)
      throw std::invalid_argument("check_rate2_structure requires the two-source relay shape");
    g[role] = e;
  }

  Compiled cc = compile(net, code.k, code.n, &code);
  auto msg = eval_all(cc);
  std::uint64_t vk = pow_u64(net.q, code.k);
  std::uint64_t fiber = pow_u64(net.q, code.n);  // q^k / q^n

  Rate2Report rep;
  rep.shape_ok = true;
  rep.fibers_ok = true;
  auto side = [&](int src, int ea, int eb, bool& bij) {
    // vary one source vector, hold the other at 0
    std::set<std::pair<int, int>> pairs;
    std::vector<std::vector<std::uint64_t>> count(2, std::vector<std::uint64_t>(cc.V, 0));
    for (std::uint64_t v = 0; v < vk; v++) {
      std::uint64_t m = src == 0 ? v * vk : v;
      int wa = msg[cc.depth_of[ea]][m], wb = msg[cc.depth_of[eb]][m];
      pairs.insert({wa, wb});
      count[0][wa]++;
      count[1][wb]++;
    }
    bij = pairs.size() == vk;
    bool surj_a = true, surj_b = true;
    for (int w = 0; w < cc.V; w++) {
      if (count[0][w] != fiber) rep.fibers_ok = false;
      if (count[1][w] != fiber) rep.fibers_ok = false;
      if (count[0][w] == 0) surj_a = false;
      if (count[1][w] == 0) surj_b = false;
    }
    return std::make_pair(surj_a, surj_b);
  };
  auto s01 = side(0, g[0], g[1], rep.bij12);
  auto s23 = side(1, g[2], g[3], rep.bij34);
  rep.surjective[0] = s01.first;
  rep.surjective[1] = s01.second;
  rep.surjective[2] = s23.first;
  rep.surjective[3] = s23.second;
  std::set<int> g5vals(msg[cc.depth_of[g[4]]].begin(), msg[cc.depth_of[g[4]]].end());
  rep.surjective[4] = (int)g5vals.size() == cc.V;
  return rep;
}

// ---------------------------------------------------------------------------
// exhaustive code search
// ---------------------------------------------------------------------------

namespace {

struct PruneCut {
  int last_depth = 0;
  std::vector<int> depths;  // cut edges as depths
  std::vector<std::pair<std::uint32_t, std::uint32_t>> must_differ;  // matrix pairs
};

}  // namespace

SearchResult search_code(const Network& net, const TargetFunction& f, int k, int n,
                         const SearchOptions& opts) {
  SearchResult res;
  Compiled cc;
  try {
    cc = compile(net, k, n, nullptr);
  } catch (const std::runtime_error&) {
    res.status = SearchStatus::space_limit;
    return res;
  }
  std::vector<int> fexp = expected_outputs(cc, net, f);

  double space = 1;
  for (const auto& slot : cc.slots) space *= std::pow((double)cc.V, (double)slot.entries);
  if (space > opts.space_limit) {
    res.status = SearchStatus::space_limit;
    return res;
  }

  // pruning cuts: grouped by the depth at which the last edge gets assigned;
  // cuts finishing at the final edge are subsumed by the leaf acceptance test
  int E = (int)cc.slots.size();
  std::vector<std::vector<PruneCut>> by_depth(E);
  if (opts.pruning && cc.M <= 4096) {
    // per-cut scalar class lookup shared across (I, J) pairs
    std::map<std::pair<SourceSet, SourceSet>, std::vector<EquivalencePartition>> part_cache;
    for (const auto& ctx : enumerate_cuts(net)) {
      PruneCut pcut;
      for (int e : mask_elements(ctx.cut)) {
        pcut.depths.push_back(cc.depth_of[e]);
        pcut.last_depth = std::max(pcut.last_depth, cc.depth_of[e]);
      }
      if (pcut.last_depth == E - 1) continue;

      auto key = std::make_pair(ctx.I, ctx.J);
      auto pit = part_cache.find(key);
      if (pit == part_cache.end()) {
        std::vector<EquivalencePartition> parts;
        std::uint64_t jspace = pow_u64(f.q, popcount(ctx.J));
        for (std::uint64_t aj = 0; aj < jspace; aj++)
          parts.push_back(
              ec_partition(f, ctx.I, ctx.J, Assignment::from_index(ctx.J, aj, f.q)));
        pit = part_cache.emplace(key, std::move(parts)).first;
      }
      const auto& parts = pit->second;

      // per matrix and row: scalar indices of the I / J / remaining parts
      SourceSet rest = ((SourceSet(1) << f.s) - 1) & ~(ctx.I | ctx.J);
      auto I_el = mask_elements(ctx.I), J_el = mask_elements(ctx.J), R_el = mask_elements(rest);
      auto row_idx = [&](std::uint64_t m, int r, const std::vector<int>& elems) {
        std::vector<int> vals;
        for (int i : elems) vals.push_back(index_tuple(cc.svec[m][i], f.q, k)[r]);
        return tuple_index(vals, f.q);
      };
      std::vector<std::vector<std::uint64_t>> iI(cc.M), iJ(cc.M), iR(cc.M);
      for (std::uint64_t m = 0; m < cc.M; m++)
        for (int r = 0; r < k; r++) {
          iI[m].push_back(row_idx(m, r, I_el));
          iJ[m].push_back(row_idx(m, r, J_el));
          iR[m].push_back(row_idx(m, r, R_el));
        }
      for (std::uint64_t a = 0; a < cc.M; a++) {
        bool a_zero = true;
        for (int r = 0; r < k; r++) a_zero &= iR[a][r] == 0;
        if (!a_zero) continue;
        for (std::uint64_t b = a + 1; b < cc.M; b++) {
          bool ok = true, differ = false;
          for (int r = 0; r < k && ok; r++) {
            if (iR[b][r] != 0 || iJ[a][r] != iJ[b][r]) ok = false;
            else if (parts[iJ[a][r]].class_of[iI[a][r]] != parts[iJ[a][r]].class_of[iI[b][r]])
              differ = true;
          }
          if (ok && differ) pcut.must_differ.push_back({(std::uint32_t)a, (std::uint32_t)b});
        }
      }
      if (!pcut.must_differ.empty()) by_depth[pcut.last_depth].push_back(std::move(pcut));
    }
  }

  // DFS state
  std::vector<std::vector<int>> table(E);
  std::vector<std::vector<int>> msg(E, std::vector<int>(cc.M));
  std::vector<int> sink_in = in_edges(net, net.node_index.at(net.sink));
  std::uint64_t sink_space = pow_u64(cc.V, sink_in.size());
  std::vector<int> dec(sink_space);

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opts.timeout_seconds));
  std::uint64_t tick = 0;
  bool timed_out = false;

  std::function<bool(int)> dfs = [&](int d) -> bool {
    if (opts.timeout_seconds > 0 && (++tick & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      timed_out = true;
      return true;
    }
    if (d == E) {
      res.candidates_tested++;
      std::fill(dec.begin(), dec.end(), -1);
      for (std::uint64_t m = 0; m < cc.M; m++) {
        std::uint64_t t = 0;
        for (int e : sink_in) t = t * cc.V + msg[cc.depth_of[e]][m];
        if (dec[t] < 0) dec[t] = fexp[m];
        else if (dec[t] != fexp[m]) return false;
      }
      return true;  // accepted
    }
    Slot& slot = cc.slots[d];
    table[d].assign(slot.entries, 0);
    std::uint64_t combos = pow_u64(cc.V, slot.entries);
    for (std::uint64_t t = 0; t < combos; t++) {
      // mixed-radix counter: first entry most significant
      std::uint64_t rem = t;
      for (int j = slot.entries - 1; j >= 0; j--) {
        table[d][j] = (int)(rem % cc.V);
        rem /= cc.V;
      }
      for (std::uint64_t m = 0; m < cc.M; m++) {
        std::uint64_t idx;
        if (slot.is_source) {
          idx = cc.svec[m][slot.src];
        } else {
          idx = 0;
          for (int in_d : slot.input_depths) idx = idx * cc.V + msg[in_d][m];
        }
        msg[d][m] = table[d][idx];
      }
      bool pruned = false;
      for (const auto& pcut : by_depth[d]) {
        for (const auto& pr : pcut.must_differ) {
          bool differ = false;
          for (int pd : pcut.depths)
            if (msg[pd][pr.first] != msg[pd][pr.second]) {
              differ = true;
              break;
            }
          if (!differ) {
            pruned = true;
            break;
          }
        }
        if (pruned) break;
      }
      if (pruned) continue;
      if (dfs(d + 1)) return true;
      if (timed_out) return true;
    }
    return false;
  };

  bool hit = dfs(0);
  if (timed_out) {
    res.status = SearchStatus::timeout;
    return res;
  }
  if (!hit) {
    res.status = SearchStatus::exhausted;
    return res;
  }

  // materialize the accepted assignment as a NetworkCode with its decoder
  NetworkCode code;
  code.k = k;
  code.n = n;
  for (int d = 0; d < E; d++) {
    const Slot& slot = cc.slots[d];
    LocalFunction lf;
    if (!slot.is_source)
      for (int in_d : slot.input_depths) lf.inputs.push_back(net.edges[cc.slots[in_d].edge].id);
    for (int entry : table[d]) lf.table.push_back(index_tuple(entry, net.q, n));
    code.edges[net.edges[slot.edge].id] = lf;
  }
  DecoderSynthesis syn = synthesize_decoder(code, net, f, sink_in);
  Decoder decoder;
  for (int e : sink_in) decoder.inputs.push_back(net.edges[e].id);
  decoder.table = syn.table;
  code.decoder = decoder;
  res.status = SearchStatus::found;
  res.code = code;
  return res;
}

// ---------------------------------------------------------------------------
// code-file JSON
// ---------------------------------------------------------------------------

NetworkCode parse_code(const std::string& json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("code file is not valid JSON: ") + e.what());
  }
  NetworkCode code;
  code.k = doc.at("k").get<int>();
  code.n = doc.at("n").get<int>();
  if (code.k < 1 || code.n < 1) throw std::runtime_error("code requires k >= 1 and n >= 1");
  for (auto it = doc.at("edges").begin(); it != doc.at("edges").end(); ++it) {
    LocalFunction lf;
    if (it.value().contains("inputs"))
      lf.inputs = it.value()["inputs"].get<std::vector<std::string>>();
    lf.table = it.value().at("table").get<std::vector<std::vector<int>>>();
    code.edges[it.key()] = lf;
  }
  if (doc.contains("decoder")) {
    Decoder dec;
    dec.inputs = doc["decoder"].at("inputs").get<std::vector<std::string>>();
    dec.table = doc["decoder"].at("table").get<std::vector<std::vector<int>>>();
    code.decoder = dec;
  }
  return code;
}

std::string serialize_code(const NetworkCode& code) {
  using nlohmann::json;
  json doc;
  doc["k"] = code.k;
  doc["n"] = code.n;
  doc["edges"] = json::object();
  for (const auto& [id, lf] : code.edges) {
    json e;
    if (!lf.inputs.empty()) e["inputs"] = lf.inputs;
    e["table"] = lf.table;
    doc["edges"][id] = e;
  }
  if (code.decoder) {
    doc["decoder"] = {{"inputs", code.decoder->inputs}, {"table", code.decoder->table}};
  }
  return doc.dump(2);
}

}  // namespace nfc
