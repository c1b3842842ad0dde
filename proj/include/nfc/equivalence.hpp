#ifndef NFC_EQUIVALENCE_HPP
#define NFC_EQUIVALENCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nfc/cut_analysis.hpp"
#include "nfc/target_function.hpp"

namespace nfc {

// Partial assignment of symbols to a set of sources, ordered by ascending index.
// Empty `over` is the canonical empty assignment.
struct Assignment {
  std::vector<int> over;    // ascending source indices
  std::vector<int> values;  // one symbol per source

  static Assignment from_index(SourceSet mask, std::uint64_t idx, int q);
  std::uint64_t index(int q) const { return tuple_index(values, q); }
};

// Partition of A^ground; class ids 0..size-1 ordered by smallest member index.
struct EquivalencePartition {
  SourceSet ground = 0;
  int q = 0;
  std::vector<int> class_of;               // assignment index -> class id
  std::vector<std::vector<std::uint64_t>> members;  // class id -> member indices, ascending
  int size() const { return (int)members.size(); }
};

// Block structure for partition equivalence: disjoint I_1..I_m plus residual L,
// all inside I, with side context J.
struct PartitionContext {
  std::vector<SourceSet> block_I;
  SourceSet I = 0;  // union of blocks and L
  SourceSet L = 0;
  SourceSet J = 0;
};

PartitionContext make_partition_context(const CutContext& ctx, const StrongPartition& sp);

// (I, a_J)-equivalence: b ~ b' iff f(b, a_J, d) agrees for every completion d.
EquivalencePartition ec_partition(const TargetFunction& f, SourceSet I, SourceSet J,
                                  const Assignment& aJ);

// (I_l, a_L, a_J)-equivalence on block l: b ~ b' iff every completion by the
// other blocks lands in the same (I, a_J)-class.
EquivalencePartition pec_partition(const TargetFunction& f, const PartitionContext& pc, int l,
                                   const Assignment& aL, const Assignment& aJ);

// Lemma-1 map: the unique ambient class containing <cl_1,...,cl_m, a_L>.
// Verifies the class is the same for every member combination; throws
// std::logic_error on disagreement (internal consistency failure).
int h_map(const TargetFunction& f, const PartitionContext& pc,
          const std::vector<const EquivalencePartition*>& block_parts,
          const std::vector<int>& class_ids, const Assignment& aL, const Assignment& aJ,
          const EquivalencePartition& ambient);

// m-dimensional array M(a_L, a_J) of ambient class ids, flattened mixed-radix
// with the first block most significant.
struct ClassArray {
  std::vector<int> dims;     // V_{I_1}..V_{I_m}
  std::vector<int> entries;  // ambient class ids
};

ClassArray build_class_array(const TargetFunction& f, const PartitionContext& pc,
                             const Assignment& aL, const Assignment& aJ,
                             const EquivalencePartition& ambient);

int count_N(const ClassArray& arr, int cl);

// n_C(P_C) with reporting detail: winning a_J (smallest index on ties) and the
// per-class counts N(Cl) for that a_J.
struct PartitionCount {
  std::uint64_t n = 0;
  Assignment aJ_star;
  std::vector<std::uint64_t> class_counts;
};

PartitionCount n_C_of_partition(const TargetFunction& f, const CutContext& ctx,
                                const StrongPartition& sp);

struct NCF {
  std::uint64_t n = 0;
  StrongPartition argmax;
  PartitionCount detail;
};

// n_{C,f} = max over strong partitions (canonical-order tie-break).
NCF n_C_f(const TargetFunction& f, const Network& net, const CutContext& ctx);

// w_{C,f} = max over a_J of the number of (I, a_J)-classes.
std::uint64_t w_C_f(const TargetFunction& f, const CutContext& ctx);

// Diagnostic JSON dump for one (C, partition, a_L, a_J): classes + array.
std::string dump_diagnostics(const TargetFunction& f, const Network& net, const CutContext& ctx,
                             const StrongPartition& sp, const Assignment& aL,
                             const Assignment& aJ);

}  // namespace nfc

#endif
