#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fperfect::cli {

struct RunConfig {
  std::uint64_t limit = 1'000'000;
  unsigned mr_rounds = 40;
  unsigned threads = 1;        // FPERFECT_THREADS overrides, --threads wins
  std::string format = "text";
  std::uint64_t seed = 0;      // 0 selects the fixed default seed
  bool no_timing = false;      // report elapsed_ms as 0 for reproducible bytes
};

/// Parse and execute one command line (without the program name).
/// Reports go to `out`, diagnostics to `err`. Exit status: 0 success,
/// 2 usage error, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fperfect::cli
