#include "nfc/bounds.hpp"

#include <cmath>
#include <limits>

namespace nfc {

static const double kInf = std::numeric_limits<double>::infinity();

// base^exp in unsigned 128-bit, saturating at the type maximum
static bool pow_u128(std::uint64_t base, int exp, unsigned __int128& out) {
  unsigned __int128 r = 1;
  const unsigned __int128 cap = ~(unsigned __int128)0;
  for (int i = 0; i < exp; i++) {
    if (base != 0 && r > cap / base) return false;
    r *= base;
  }
  out = r;
  return true;
}

bool ratio_less(int size_a, std::uint64_t denom_a, int size_b, std::uint64_t denom_b) {
  // size/log(denom): infinite ratios (denom <= 1) are never smaller
  if (denom_a <= 1) return false;
  if (denom_b <= 1) return true;
  unsigned __int128 lhs, rhs;
  if (pow_u128(denom_b, size_a, lhs) && pow_u128(denom_a, size_b, rhs)) return lhs < rhs;
  return (long double)size_a * logl((long double)denom_b) <
         (long double)size_b * logl((long double)denom_a);
}

static double ratio_value(int size, std::uint64_t denom, int q) {
  if (denom <= 1) return kInf;
  return size / (std::log2((double)denom) / std::log2((double)q));
}

// shared minimization scaffold; fill(row, ctx) computes the denominator + detail
template <typename Fill>
static BoundReport evaluate(const Network& net, const std::string& kind, bool global_only,
                            std::optional<int> max_cut_size, Fill fill) {
  BoundReport rep;
  rep.kind = kind;
  rep.q = net.q;
  rep.value = kInf;
  for (const auto& ctx : enumerate_cuts(net, max_cut_size)) {
    if (global_only && !ctx.is_global(net)) continue;
    CutRow row;
    row.cut = cut_edge_ids(net, ctx.cut);
    row.size = popcount(ctx.cut);
    row.global = ctx.is_global(net);
    fill(row, ctx);
    row.ratio = ratio_value(row.size, row.denom, net.q);
    rep.rows.push_back(row);
    int i = (int)rep.rows.size() - 1;
    // canonical enumeration order breaks ties (strict improvement required)
    if (rep.best_row < 0 ? row.denom > 1
                         : ratio_less(row.size, row.denom, rep.rows[rep.best_row].size,
                                      rep.rows[rep.best_row].denom))
      rep.best_row = i;
  }
  if (rep.best_row >= 0) {
    rep.value = rep.rows[rep.best_row].ratio;
    rep.argmin = rep.rows[rep.best_row].cut;
  }
  return rep;
}

BoundReport bound_footprint(const Network& net, const TargetFunction& f,
                            std::optional<int> max_cut_size) {
  std::uint64_t img = image_size(f);
  return evaluate(net, "footprint", true, max_cut_size,
                  [&](CutRow& row, const CutContext&) { row.denom = img; });
}

BoundReport bound_huang(const Network& net, const TargetFunction& f,
                        std::optional<int> max_cut_size) {
  return evaluate(net, "huang", false, max_cut_size,
                  [&](CutRow& row, const CutContext& ctx) { row.denom = w_C_f(f, ctx); });
}

BoundReport bound_improved(const Network& net, const TargetFunction& f,
                           std::optional<int> max_cut_size) {
  return evaluate(net, "improved", false, max_cut_size, [&](CutRow& row, const CutContext& ctx) {
    NCF res = n_C_f(f, net, ctx);
    row.denom = res.n;
    for (EdgeSet b : res.argmax.blocks) row.partition.push_back(cut_edge_ids(net, b));
    for (int j : mask_elements(ctx.J)) row.J_sources.push_back(net.sources[j]);
    row.aJ_star = res.detail.aJ_star.values;
  });
}

FullReport full_report(const Network& net, const TargetFunction& f,
                       std::optional<int> max_cut_size) {
  FullReport rep;
  rep.footprint = bound_footprint(net, f, max_cut_size);
  rep.huang = bound_huang(net, f, max_cut_size);
  rep.improved = bound_improved(net, f, max_cut_size);
  rep.ordered = !(rep.huang.value < rep.improved.value - 1e-12) &&
                !(rep.footprint.value < rep.huang.value - 1e-12);
  return rep;
}

}  // namespace nfc
