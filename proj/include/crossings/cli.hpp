#pragma once

#include <string>
#include <vector>

namespace crossings {

inline constexpr const char* kVersion = "1.0.0";

/// Runs one CLI invocation (arguments without the program name) and returns
/// the process exit code: 0 success, 2 usage error, 3 validation error,
/// 4 capability error (enumeration cap exceeded, bound inapplicable).
int run_cli(const std::vector<std::string>& args);

}  // namespace crossings
