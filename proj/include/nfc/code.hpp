#ifndef NFC_CODE_HPP
#define NFC_CODE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nfc/cut_analysis.hpp"
#include "nfc/network.hpp"
#include "nfc/target_function.hpp"

namespace nfc {

// Local encoding function of one edge. Source edges take the tail source's
// vector (q^k table entries); other edges declare their input edge order and
// take one word per input ((q^n)^inputs entries). Entries are n-symbol words.
struct LocalFunction {
  std::vector<std::string> inputs;  // empty for source edges
  std::vector<std::vector<int>> table;
};

struct Decoder {
  std::vector<std::string> inputs;          // in-edges of the sink, declared order
  std::vector<std::vector<int>> table;      // entries: k output symbols
};

struct NetworkCode {
  int k = 1;
  int n = 1;
  std::map<std::string, LocalFunction> edges;
  std::optional<Decoder> decoder;
};

struct Verdict {
  bool ok = false;
  std::vector<std::vector<int>> counterexample;  // source matrix, k rows per source column
  std::vector<int> expected;                      // f applied row-wise
  std::vector<int> decoded;
  std::string reason;
};

// Source matrix x_S in A^{k x s}: one length-k column vector per source.
using SourceMatrix = std::vector<std::vector<int>>;

// Global encoding by topological recursion; returns one n-symbol word per edge.
std::map<std::string, std::vector<int>> eval_global(const NetworkCode& code, const Network& net,
                                                    const SourceMatrix& x);

// Decoder table over (A^n)^{|C|} mapping g_C to f(x_S); fails with a witness
// pair when the map is not single-valued. Unreached tuples get all-zero output.
struct DecoderSynthesis {
  bool ok = false;
  std::vector<std::vector<int>> table;
  std::vector<char> reached;
  SourceMatrix witness_a, witness_b;  // equal g_C, different f (when !ok)
};

DecoderSynthesis synthesize_decoder(const NetworkCode& code, const Network& net,
                                    const TargetFunction& f, const std::vector<int>& cut_edges);

// Exhaustive check over all q^{k s} source matrices; uses the supplied decoder
// when present (cross-checked against synthesis on reached tuples) or a
// synthesized decoder over the sink's in-edges.
Verdict verify_code(const NetworkCode& code, const Network& net, const TargetFunction& f);

// The induced target function across a global cut (arity |C| over alphabet q^n,
// output alphabet |O|^k). Requires a well-defined decoder and every cut edge
// surjective onto A^n.
TargetFunction induce_function(const NetworkCode& code, const Network& net,
                               const TargetFunction& f, const std::vector<int>& cut_edges);

// Structural checks for a (2n,n) code on the two-source relay shape.
struct Rate2Report {
  bool shape_ok = false;
  bool bij12 = false, bij34 = false;
  bool surjective[5] = {false, false, false, false, false};  // g1..g5
  bool fibers_ok = false;                                    // |g_i^-1| = 2^n, i=1..4
};

Rate2Report check_rate2_structure(const NetworkCode& code, const Network& net);

enum class SearchStatus { found, exhausted, timeout, space_limit };

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<NetworkCode> code;
  std::uint64_t candidates_tested = 0;
};

struct SearchOptions {
  double timeout_seconds = 0;       // 0 = no timeout
  bool pruning = true;
  double space_limit = 1e18;        // estimated number of raw table combinations
  std::uint64_t matrix_limit = 1u << 20;  // cap on q^{k s}
};

// Deterministic DFS over local tables in topological edge order; a candidate is
// accepted iff a decoder over the sink's in-edges is well-defined. The first
// accepted code in canonical order is returned (with its synthesized decoder).
SearchResult search_code(const Network& net, const TargetFunction& f, int k, int n,
                         const SearchOptions& opts = {});

// Code-file JSON.
NetworkCode parse_code(const std::string& json_text);
std::string serialize_code(const NetworkCode& code);

}  // namespace nfc

#endif
