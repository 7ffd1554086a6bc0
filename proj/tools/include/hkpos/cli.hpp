#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hkpos::cli {

/// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkpos::cli
