#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace millionaire {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// args excludes the program name. Machine-readable output goes to `out`
// (or the file named by --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace millionaire
