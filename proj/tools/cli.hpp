#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fc::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fc::cli
