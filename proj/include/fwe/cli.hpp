#pragma once

namespace fwe {

/// Command-line front end. Subcommands: search, construct, zeta, rh,
/// extremal, conjecture, catalog. Exit codes: 0 success, 1 usage or input
/// error, 2 indeterminate verdict (rh only), 3 verification failure
/// (conjecture only).
int run_command(int argc, const char* const* argv);

}  // namespace fwe
