#pragma once

#include <ostream>

namespace windform::shell {

/// Entry point for the `windform` command line:
///
///   windform interpolate STATIONS.csv [--power P] [--cols N] [--rows N] [--pad F] [--out DIR]
///   windform scatter CONFIG [--job NAME]
///   windform iktrail CONFIG [--job NAME]
///   windform swarm CONFIG [--job NAME] [--steps N] [--seed S]
///   windform serve CONFIG [--host H] [--port P]
///
/// Returns the process exit code: 0 on success, 1 on runtime failures, 2 on invalid
/// arguments or configs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace windform::shell
