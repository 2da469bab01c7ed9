#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyknot {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`; exit 1 and 2 also print a {"error": {...}} object to `out` and a
/// one-line message to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyknot
