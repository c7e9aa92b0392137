#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cherednik::cli {

inline constexpr const char* kConfigEnv = "CHEREDNIK_CONFIG";

struct JobConfig {
  int N = 12;
  int size_bound = 8;
  int cap = 20;
  std::string format = "text";  // json | text
};

// Arguments exclude the program name. Exit codes: 0 ok, 1 selftest failure,
// 2 usage error, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherednik::cli
