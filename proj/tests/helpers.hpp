#ifndef NFC_TEST_HELPERS_HPP
#define NFC_TEST_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>

inline std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& name) { return slurp(data_path(name)); }

#endif
