#include "nfc/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace nfc {

// guards the exhaustive assignment enumerations
static const std::uint64_t kSpaceLimit = 1ull << 16;

Assignment Assignment::from_index(SourceSet mask, std::uint64_t idx, int q) {
  Assignment a;
  a.over = mask_elements(mask);
  a.values = index_tuple(idx, q, (int)a.over.size());
  return a;
}

// write assignment values into a full source tuple
static void scatter(std::vector<int>& x, const Assignment& a) {
  for (int i = 0; i < (int)a.over.size(); i++) x[a.over[i]] = a.values[i];
}

static void scatter_mask(std::vector<int>& x, SourceSet mask, std::uint64_t idx, int q) {
  auto elems = mask_elements(mask);
  auto vals = index_tuple(idx, q, (int)elems.size());
  for (int i = 0; i < (int)elems.size(); i++) x[elems[i]] = vals[i];
}

static void check_space(std::uint64_t size, const char* what) {
  if (size > kSpaceLimit)
    throw std::runtime_error(std::string("assignment space limit exceeded in ") + what);
}

// group assignment indices 0..space-1 by signature, ids in first-seen order
// (ascending scan puts the smallest member first in each class)
static EquivalencePartition group_by_signature(
    SourceSet ground, int q, std::uint64_t space,
    const std::function<std::vector<int>(std::uint64_t)>& signature) {
  EquivalencePartition part;
  part.ground = ground;
  part.q = q;
  part.class_of.resize(space);
  std::map<std::vector<int>, int> ids;
  for (std::uint64_t b = 0; b < space; b++) {
    auto sig = signature(b);
    auto it = ids.find(sig);
    int id;
    if (it == ids.end()) {
      id = (int)part.members.size();
      ids.emplace(std::move(sig), id);
      part.members.emplace_back();
    } else {
      id = it->second;
    }
    part.class_of[b] = id;
    part.members[id].push_back(b);
  }
  return part;
}

EquivalencePartition ec_partition(const TargetFunction& f, SourceSet I, SourceSet J,
                                  const Assignment& aJ) {
  if (I & J) throw std::runtime_error("ec_partition: I and J overlap");
  SourceSet full = (SourceSet(1) << f.s) - 1;
  SourceSet rest = full & ~(I | J);
  std::uint64_t bspace = pow_u64(f.q, popcount(I));
  std::uint64_t dspace = pow_u64(f.q, popcount(rest));
  check_space(bspace, "ec_partition");

  std::vector<int> x(f.s, 0);
  scatter(x, aJ);
  auto sig = [&](std::uint64_t b) {
    scatter_mask(x, I, b, f.q);
    std::vector<int> out((size_t)dspace);
    for (std::uint64_t d = 0; d < dspace; d++) {
      scatter_mask(x, rest, d, f.q);
      out[d] = f.eval(x);
    }
    return out;
  };
  return group_by_signature(I, f.q, bspace, sig);
}

PartitionContext make_partition_context(const CutContext& ctx, const StrongPartition& sp) {
  PartitionContext pc;
  pc.block_I = sp.block_I;
  pc.I = ctx.I;
  pc.L = sp.L;
  pc.J = ctx.J;
  return pc;
}

EquivalencePartition pec_partition(const TargetFunction& f, const PartitionContext& pc, int l,
                                   const Assignment& aL, const Assignment& aJ) {
  if (l < 0 || l >= (int)pc.block_I.size())
    throw std::runtime_error("pec_partition: block index out of range");
  EquivalencePartition ambient = ec_partition(f, pc.I, pc.J, aJ);

  SourceSet others = 0;
  std::vector<SourceSet> other_blocks;
  for (int j = 0; j < (int)pc.block_I.size(); j++)
    if (j != l) {
      others |= pc.block_I[j];
      other_blocks.push_back(pc.block_I[j]);
    }
  std::uint64_t bspace = pow_u64(f.q, popcount(pc.block_I[l]));
  std::uint64_t cspace = pow_u64(f.q, popcount(others));
  check_space(bspace * cspace, "pec_partition");

  std::vector<int> xi(f.s, 0);  // holds values on I; read back via the I index
  scatter(xi, aL);
  auto I_elems = mask_elements(pc.I);
  auto sig = [&](std::uint64_t b) {
    scatter_mask(xi, pc.block_I[l], b, f.q);
    std::vector<int> out((size_t)cspace);
    for (std::uint64_t c = 0; c < cspace; c++) {
      scatter_mask(xi, others, c, f.q);
      std::vector<int> bI;
      for (int s : I_elems) bI.push_back(xi[s]);
      out[c] = ambient.class_of[tuple_index(bI, f.q)];
    }
    return out;
  };
  return group_by_signature(pc.block_I[l], f.q, bspace, sig);
}

int h_map(const TargetFunction& f, const PartitionContext& pc,
          const std::vector<const EquivalencePartition*>& block_parts,
          const std::vector<int>& class_ids, const Assignment& aL, const Assignment& aJ,
          const EquivalencePartition& ambient) {
  (void)aJ;  // ambient already carries the a_J context
  int m = (int)pc.block_I.size();
  if ((int)block_parts.size() != m || (int)class_ids.size() != m)
    throw std::runtime_error("h_map: malformed block inputs");

  auto I_elems = mask_elements(pc.I);
  std::vector<int> xi(f.s, 0);
  scatter(xi, aL);
  int result = -1;
  // every member combination must land in one ambient class (Lemma 1)
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    for (int l = 0; l < m; l++)
      scatter_mask(xi, pc.block_I[l], block_parts[l]->members[class_ids[l]][pick[l]], f.q);
    std::vector<int> bI;
    for (int s : I_elems) bI.push_back(xi[s]);
    int cl = ambient.class_of[tuple_index(bI, f.q)];
    if (result < 0)
      result = cl;
    else if (cl != result)
      throw std::logic_error("h_map: member combinations fall into different ambient classes");
    int l = m - 1;
    while (l >= 0 && ++pick[l] == block_parts[l]->members[class_ids[l]].size()) pick[l--] = 0;
    if (l < 0) break;
  }
  return result;
}

ClassArray build_class_array(const TargetFunction& f, const PartitionContext& pc,
                             const Assignment& aL, const Assignment& aJ,
                             const EquivalencePartition& ambient) {
  int m = (int)pc.block_I.size();
  std::vector<EquivalencePartition> parts;
  parts.reserve(m);
  for (int l = 0; l < m; l++) parts.push_back(pec_partition(f, pc, l, aL, aJ));
  std::vector<const EquivalencePartition*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);

  ClassArray arr;
  std::uint64_t total = 1;
  for (const auto& p : parts) {
    arr.dims.push_back(p.size());
    total *= p.size();
  }
  std::vector<int> ids(m, 0);
  for (std::uint64_t t = 0; t < total; t++) {
    std::uint64_t rem = t;
    for (int l = m - 1; l >= 0; l--) {
      ids[l] = (int)(rem % arr.dims[l]);
      rem /= arr.dims[l];
    }
    arr.entries.push_back(h_map(f, pc, ptrs, ids, aL, aJ, ambient));
  }
  return arr;
}

int count_N(const ClassArray& arr, int cl) {
  int n = 0;
  for (int e : arr.entries)
    if (e == cl) n++;
  return n;
}

PartitionCount n_C_of_partition(const TargetFunction& f, const CutContext& ctx,
                                const StrongPartition& sp) {
  PartitionContext pc = make_partition_context(ctx, sp);
  std::uint64_t jspace = pow_u64(f.q, popcount(pc.J));
  std::uint64_t lspace = pow_u64(f.q, popcount(pc.L));
  check_space(jspace * lspace, "n_C_of_partition");

  PartitionCount best;
  for (std::uint64_t aj = 0; aj < jspace; aj++) {
    Assignment aJ = Assignment::from_index(pc.J, aj, f.q);
    EquivalencePartition ambient = ec_partition(f, pc.I, pc.J, aJ);
    std::vector<std::uint64_t> N(ambient.size(), 0);
    for (std::uint64_t al = 0; al < lspace; al++) {
      Assignment aL = Assignment::from_index(pc.L, al, f.q);
      ClassArray arr = build_class_array(f, pc, aL, aJ, ambient);
      for (int cl = 0; cl < ambient.size(); cl++)
        N[cl] = std::max<std::uint64_t>(N[cl], count_N(arr, cl));
    }
    std::uint64_t sum = 0;
    for (auto v : N) sum += v;
    // strict > keeps the smallest a_J index on ties
    if (sum > best.n) {
      best.n = sum;
      best.aJ_star = aJ;
      best.class_counts = N;
    }
  }
  return best;
}

NCF n_C_f(const TargetFunction& f, const Network& net, const CutContext& ctx) {
  NCF best;
  for (const auto& sp : enumerate_strong_partitions(net, ctx)) {
    PartitionCount pcnt = n_C_of_partition(f, ctx, sp);
    if (pcnt.n > best.n) {  // canonical partition order breaks ties
      best.n = pcnt.n;
      best.argmax = sp;
      best.detail = pcnt;
    }
  }
  return best;
}

std::uint64_t w_C_f(const TargetFunction& f, const CutContext& ctx) {
  std::uint64_t jspace = pow_u64(f.q, popcount(ctx.J));
  std::uint64_t best = 0;
  for (std::uint64_t aj = 0; aj < jspace; aj++) {
    Assignment aJ = Assignment::from_index(ctx.J, aj, f.q);
    EquivalencePartition part = ec_partition(f, ctx.I, ctx.J, aJ);
    best = std::max<std::uint64_t>(best, part.size());
  }
  return best;
}

std::string dump_diagnostics(const TargetFunction& f, const Network& net, const CutContext& ctx,
                             const StrongPartition& sp, const Assignment& aL,
                             const Assignment& aJ) {
  using nlohmann::json;
  PartitionContext pc = make_partition_context(ctx, sp);
  EquivalencePartition ambient = ec_partition(f, pc.I, pc.J, aJ);

  json doc;
  doc["cut"] = cut_edge_ids(net, ctx.cut);
  auto tuples = [&](const EquivalencePartition& p) {
    json classes = json::array();
    int width = popcount(p.ground);
    for (const auto& cls : p.members) {
      json members = json::array();
      for (auto idx : cls) members.push_back(index_tuple(idx, p.q, width));
      classes.push_back(members);
    }
    return classes;
  };
  doc["ambient_classes"] = tuples(ambient);
  doc["block_classes"] = json::array();
  for (int l = 0; l < (int)pc.block_I.size(); l++)
    doc["block_classes"].push_back(tuples(pec_partition(f, pc, l, aL, aJ)));
  ClassArray arr = build_class_array(f, pc, aL, aJ, ambient);
  doc["array_dims"] = arr.dims;
  doc["array_entries"] = arr.entries;
  json counts = json::array();
  for (int cl = 0; cl < ambient.size(); cl++) counts.push_back(count_N(arr, cl));
  doc["counts"] = counts;
  doc["a_L"] = aL.values;
  doc["a_J"] = aJ.values;
  return doc.dump(2);
}

}  // namespace nfc
