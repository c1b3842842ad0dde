#ifndef NFC_CUT_ANALYSIS_HPP
#define NFC_CUT_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "nfc/network.hpp"
#include "nfc/target_function.hpp"

namespace nfc {

// A cut set C with its separated (I), reaching (K) and side (J = K \ I) sources.
struct CutContext {
  EdgeSet cut = 0;
  SourceSet I = 0;
  SourceSet K = 0;
  SourceSet J = 0;
  bool is_global(const Network& net) const {
    return I == ((SourceSet(1) << net.num_sources()) - 1);
  }
};

// Set partition {C_1..C_m} of a cut with I_{C_l} nonempty and pairwise disjoint.
// Residual L = I_C \ (union of block_I).
struct StrongPartition {
  std::vector<EdgeSet> blocks;
  std::vector<SourceSet> block_I;
  SourceSet L = 0;
  bool trivial() const { return blocks.size() == 1; }
};

// mask helpers
inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }
std::vector<int> mask_elements(std::uint32_t m);  // ascending indices

// I_C: sources with no path to the sink once C is deleted.
SourceSet separated_sources(const Network& net, EdgeSet C);
// K_C: sources with a path to tail(e) for some e in C.
SourceSet reaching_sources(const Network& net, EdgeSet C);

CutContext make_cut_context(const Network& net, EdgeSet C);  // throws if I_C empty

// All cut sets (I_C nonempty), ordered by size then lexicographic edge-id tuple.
// Throws if the edge count exceeds the enumeration limit (default 20).
std::vector<CutContext> enumerate_cuts(const Network& net,
                                       std::optional<int> max_size = std::nullopt,
                                       int edge_limit = 20);

// All strong partitions of ctx.cut; always contains the trivial partition.
// Canonical order: blocks sorted by smallest edge id, partitions lexicographic.
std::vector<StrongPartition> enumerate_strong_partitions(const Network& net,
                                                         const CutContext& ctx);

// min over cuts of |C| / Rank([T_i : sigma_i in I_C]); rank-0 cuts skipped.
struct RationalMinCut {
  int num = 0;   // |C|
  int den = 0;   // rank
  EdgeSet argmin = 0;
  double value() const { return (double)num / den; }
};
RationalMinCut min_cut_linear(const Network& net, const LinearSpec& spec);

// cut as sorted edge ids
std::vector<std::string> cut_edge_ids(const Network& net, EdgeSet C);
EdgeSet edge_set_from_ids(const Network& net, const std::vector<std::string>& ids);

}  // namespace nfc

#endif
