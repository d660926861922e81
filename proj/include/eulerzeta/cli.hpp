#pragma once

#include <iosfwd>

namespace eulerzeta {

/// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (zeta, integral, identity, verify, table). Results go
/// to `out`; diagnostics and usage text go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulerzeta
