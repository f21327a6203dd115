#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strongmatch::cli {

// Exit codes. Each outcome class maps to exactly one code.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;  // verify found a bad matching or certificate
inline constexpr int kMaxDegree = 2;
inline constexpr int kC25 = 3;
inline constexpr int kUsage = 4;
inline constexpr int kInvariant = 5;
inline constexpr int kFuzzFailures = 6;
inline constexpr int kBudget = 7;

/// args excludes the program name. Results go to `out` (or --out files),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongmatch::cli
