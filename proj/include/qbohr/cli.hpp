#pragma once

namespace qbohr {

/// Entry point of the command-line tool. Subcommands: radius, constants,
/// sum, sweep, verify, extremal. Returns 0 on success, 1 when any
/// verification verdict is Violated, 2 on usage errors.
int cli_main(int argc, const char* const* argv);

} // namespace qbohr
