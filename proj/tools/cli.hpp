#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyck4d::cli {

/// Exit statuses of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name. Failures are
/// written to `err` as one line starting `error:<kind>[:<position>]`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dyck4d::cli
