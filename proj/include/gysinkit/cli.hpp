#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gysinkit::cli {

enum ExitCode : int {
  success = 0,
  check_failed = 1,
  validation_error = 2,
  unsupported = 3,
};

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for report input digests.
std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

} // namespace gysinkit::cli
