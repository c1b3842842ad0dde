#ifndef NFC_TARGET_FUNCTION_HPP
#define NFC_TARGET_FUNCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nfc {

// Target function f : A^s -> O with A = {0..q-1}, O = {0..output_alphabet_size-1},
// stored as a dense table indexed by the mixed-radix index of (x_1..x_s),
// x_1 most significant.
struct TargetFunction {
  int s = 0;
  int q = 0;
  int output_alphabet_size = 0;
  std::vector<int> table;  // size q^s

  int eval(const std::vector<int>& x) const;  // x.size() == s, symbols in [0,q)
  int eval_index(std::uint64_t idx) const { return table[idx]; }
  std::uint64_t domain_size() const;
};

// Mixed-radix helpers shared across the project: index(x) = sum x_i * q^(len-1-i),
// i.e. the first coordinate is most significant.
std::uint64_t tuple_index(const std::vector<int>& x, int q);
std::vector<int> index_tuple(std::uint64_t idx, int q, int len);
std::uint64_t pow_u64(std::uint64_t base, int exp);

// Full-rank l x s matrix over the prime field F_q, no all-zero columns.
struct LinearSpec {
  int q = 0;
  std::vector<std::vector<int>> matrix;  // l rows, s columns, entries in [0,q)
};

bool is_prime(int q);

// Row rank of a matrix over F_p (p prime) by Gaussian elimination.
int rank_over_prime_field(std::vector<std::vector<int>> m, int p);

// Builds f(x) = T x^T as a table function; output index is the mixed-radix
// encoding of the l result coordinates (first row most significant).
// Throws if q is not prime, T is not full rank, or T has a zero column.
TargetFunction linear_from_spec(const LinearSpec& spec);

// Builtins: "arith_sum" (integer sum, outputs 0..s(q-1)), "mod_sum" (sum mod q),
// "max", "min", "identity" (output alphabet q^s, entry = index(x)).
TargetFunction make_builtin(const std::string& kind, int s, int q);

// Number of distinct values |f(A^s)|.
std::uint64_t image_size(const TargetFunction& f);

// Function-file JSON (type builtin | linear | table). Throws on malformed input.
TargetFunction parse_function(const std::string& json_text);
std::string serialize_function(const TargetFunction& f);  // always emits a table function

}  // namespace nfc

#endif
