#include "nfc/target_function.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace nfc {

using nlohmann::json;

// hard cap on materialized tables; guards q^s blowups
static const std::uint64_t kTableLimit = 1ull << 20;

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; i++) r *= base;
  return r;
}

std::uint64_t tuple_index(const std::vector<int>& x, int q) {
  std::uint64_t idx = 0;
  for (int v : x) idx = idx * q + v;
  return idx;
}

std::vector<int> index_tuple(std::uint64_t idx, int q, int len) {
  std::vector<int> x(len);
  for (int i = len - 1; i >= 0; i--) {
    x[i] = (int)(idx % q);
    idx /= q;
  }
  return x;
}

int TargetFunction::eval(const std::vector<int>& x) const {
  if ((int)x.size() != s) throw std::invalid_argument("eval: arity mismatch");
  return table[tuple_index(x, q)];
}

std::uint64_t TargetFunction::domain_size() const { return pow_u64(q, s); }

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; d++)
    if (q % d == 0) return false;
  return true;
}

int rank_over_prime_field(std::vector<std::vector<int>> m, int p) {
  if (m.empty()) return 0;
  int rows = (int)m.size(), cols = (int)m[0].size();
  auto inv_mod = [&](int a) {  // Fermat inverse, p prime
    int r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; c++) {
    int pivot = -1;
    for (int r = rank; r < rows; r++)
      if (m[r][c] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    int inv = inv_mod(((m[rank][c] % p) + p) % p);
    for (int j = c; j < cols; j++) m[rank][j] = m[rank][j] * inv % p;
    for (int r = 0; r < rows; r++) {
      if (r == rank || m[r][c] % p == 0) continue;
      int factor = m[r][c] % p;
      for (int j = c; j < cols; j++)
        m[r][j] = ((m[r][j] - factor * m[rank][j]) % p + p) % p;
    }
    rank++;
  }
  return rank;
}

static void check_table_size(std::uint64_t size) {
  if (size > kTableLimit) throw std::runtime_error("function table exceeds the size limit");
}

TargetFunction linear_from_spec(const LinearSpec& spec) {
  if (!is_prime(spec.q)) throw std::runtime_error("linear functions require prime q");
  if (spec.matrix.empty() || spec.matrix[0].empty())
    throw std::runtime_error("linear matrix must be nonempty");
  int l = (int)spec.matrix.size(), s = (int)spec.matrix[0].size();
  for (const auto& row : spec.matrix) {
    if ((int)row.size() != s) throw std::runtime_error("linear matrix rows have unequal length");
    for (int v : row)
      if (v < 0 || v >= spec.q) throw std::runtime_error("linear matrix entry out of range");
  }
  if (rank_over_prime_field(spec.matrix, spec.q) != l)
    throw std::runtime_error("linear matrix is not full rank");
  for (int c = 0; c < s; c++) {
    bool nonzero = false;
    for (int r = 0; r < l; r++)
      if (spec.matrix[r][c] != 0) nonzero = true;
    if (!nonzero) throw std::runtime_error("linear matrix has an all-zero column");
  }

  TargetFunction f;
  f.s = s;
  f.q = spec.q;
  f.output_alphabet_size = (int)pow_u64(spec.q, l);
  std::uint64_t dom = pow_u64(spec.q, s);
  check_table_size(dom);
  f.table.resize(dom);
  for (std::uint64_t idx = 0; idx < dom; idx++) {
    auto x = index_tuple(idx, spec.q, s);
    std::vector<int> y(l, 0);
    for (int r = 0; r < l; r++)
      for (int c = 0; c < s; c++) y[r] = (y[r] + spec.matrix[r][c] * x[c]) % spec.q;
    f.table[idx] = (int)tuple_index(y, spec.q);
  }
  return f;
}

TargetFunction make_builtin(const std::string& kind, int s, int q) {
  if (s < 1 || q < 2) throw std::runtime_error("builtin requires s >= 1 and q >= 2");
  TargetFunction f;
  f.s = s;
  f.q = q;
  std::uint64_t dom = pow_u64(q, s);
  check_table_size(dom);
  f.table.resize(dom);
  for (std::uint64_t idx = 0; idx < dom; idx++) {
    auto x = index_tuple(idx, q, s);
    if (kind == "arith_sum") {
      int sum = 0;
      for (int v : x) sum += v;
      f.table[idx] = sum;
    } else if (kind == "mod_sum") {
      int sum = 0;
      for (int v : x) sum = (sum + v) % q;
      f.table[idx] = sum;
    } else if (kind == "max") {
      f.table[idx] = *std::max_element(x.begin(), x.end());
    } else if (kind == "min") {
      f.table[idx] = *std::min_element(x.begin(), x.end());
    } else if (kind == "identity") {
      f.table[idx] = (int)idx;
    } else {
      throw std::runtime_error("unsupported builtin kind '" + kind + "'");
    }
  }
  if (kind == "arith_sum")
    f.output_alphabet_size = s * (q - 1) + 1;
  else if (kind == "identity")
    f.output_alphabet_size = (int)dom;
  else
    f.output_alphabet_size = q;
  return f;
}

std::uint64_t image_size(const TargetFunction& f) {
  std::set<int> vals(f.table.begin(), f.table.end());
  return vals.size();
}

TargetFunction parse_function(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("function file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("type"))
    throw std::runtime_error("function file must be an object with a 'type' field");
  std::string type = doc["type"].get<std::string>();
  if (type == "builtin") {
    return make_builtin(doc.at("kind").get<std::string>(), doc.at("s").get<int>(),
                        doc.at("q").get<int>());
  }
  if (type == "linear") {
    LinearSpec spec;
    spec.q = doc.at("q").get<int>();
    spec.matrix = doc.at("matrix").get<std::vector<std::vector<int>>>();
    return linear_from_spec(spec);
  }
  if (type == "table") {
    TargetFunction f;
    f.s = doc.at("s").get<int>();
    f.q = doc.at("q").get<int>();
    f.output_alphabet_size = doc.at("output_alphabet_size").get<int>();
    f.table = doc.at("table").get<std::vector<int>>();
    if (f.s < 1 || f.q < 2 || f.output_alphabet_size < 1)
      throw std::runtime_error("table function has invalid shape parameters");
    if (f.table.size() != pow_u64(f.q, f.s))
      throw std::runtime_error("table length does not match q^s");
    for (int v : f.table)
      if (v < 0 || v >= f.output_alphabet_size)
        throw std::runtime_error("table entry outside the output alphabet");
    return f;
  }
  throw std::runtime_error("unknown function type '" + type + "'");
}

std::string serialize_function(const TargetFunction& f) {
  json doc;
  doc["type"] = "table";
  doc["s"] = f.s;
  doc["q"] = f.q;
  doc["output_alphabet_size"] = f.output_alphabet_size;
  doc["table"] = f.table;
  return doc.dump(2);
}

}  // namespace nfc
