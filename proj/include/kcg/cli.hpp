#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `kcg` command. `args` excludes the program name. A table path of
/// `-` reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kcg::cli
