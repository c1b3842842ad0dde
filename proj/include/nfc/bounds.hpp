#ifndef NFC_BOUNDS_HPP
#define NFC_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nfc/equivalence.hpp"

namespace nfc {

// One enumerated cut with its denominator count and ratio |C| / log_q(n).
struct CutRow {
  std::vector<std::string> cut;  // sorted edge ids
  int size = 0;
  std::uint64_t denom = 1;       // n_{C,f}, w_{C,f} or |f(A^s)| depending on the bound
  double ratio = 0;              // +inf when denom <= 1
  bool global = false;
  // improved-bound detail
  std::vector<std::vector<std::string>> partition;  // argmax strong partition
  std::vector<std::string> J_sources;
  std::vector<int> aJ_star;
};

struct BoundReport {
  std::string kind;  // footprint | huang | improved
  double value = 0;  // +inf when every row is non-constraining
  int q = 0;
  std::vector<std::string> argmin;  // cut edge ids; empty when value = +inf
  int best_row = -1;
  std::vector<CutRow> rows;
};

// Exact log-domain ratio comparison: size/log_q(denom) ordered by comparing
// denom'^size vs denom^size' in 128-bit, long-double logs on joint overflow.
// Returns true when (size_a, denom_a) is a strictly smaller ratio.
bool ratio_less(int size_a, std::uint64_t denom_a, int size_b, std::uint64_t denom_b);

BoundReport bound_footprint(const Network& net, const TargetFunction& f,
                            std::optional<int> max_cut_size = std::nullopt);
BoundReport bound_huang(const Network& net, const TargetFunction& f,
                        std::optional<int> max_cut_size = std::nullopt);
BoundReport bound_improved(const Network& net, const TargetFunction& f,
                           std::optional<int> max_cut_size = std::nullopt);

struct FullReport {
  BoundReport footprint, huang, improved;
  bool ordered = false;  // improved <= huang <= footprint
};

FullReport full_report(const Network& net, const TargetFunction& f,
                       std::optional<int> max_cut_size = std::nullopt);

}  // namespace nfc

#endif
