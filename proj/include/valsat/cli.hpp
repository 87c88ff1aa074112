#pragma once

#include <iosfwd>

namespace valsat {

// Exit codes: 0 success, 1 UNKNOWN or a failed check, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnknown = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the valsat executable. Machine output goes to `out`,
// diagnostics and the resolved configuration to `err`; `in` replaces a
// missing input path.
int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out,
            std::ostream &err);

} // namespace valsat
