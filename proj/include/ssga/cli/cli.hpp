#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssga::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Entry point behind the `ssga` executable. args[0] is the program name.
/// Results go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ssga::cli
