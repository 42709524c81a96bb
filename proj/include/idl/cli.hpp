#pragma once

// The `idl` command-line tool.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace idl {

enum class OutputFormat { Text, JsonLines };

struct RunConfig {
  std::size_t max_ground_rules = 1'000'000;
  std::size_t max_search_nodes = 1'000'000;
  bool lenient_sentences = false;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idl
