#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amdesign::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAnomaly = 3;

/// Runs one `amdesign` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace amdesign::cli
