#pragma once

namespace hof {

/// Command-line entry point. Exit code 0 on success / all checks passing,
/// 1 on a failed check or runtime failure, 2 on a usage or configuration
/// error. HOF_THREADS controls the worker count; output is byte-stable
/// across worker counts and locales.
int run_cli(int argc, const char* const* argv);

}  // namespace hof
