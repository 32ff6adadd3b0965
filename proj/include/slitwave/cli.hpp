#ifndef SLITWAVE_CLI_HPP
#define SLITWAVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "slitwave/emit.hpp"

namespace slitwave::cli {

/// Computes the selected models and their analyses for one scenario.
RunResult execute(const Scenario &s, Normalization norm, unsigned threads);

/// Thread cap from SLITWAVE_THREADS, else the hardware concurrency.
unsigned thread_budget();

/// Entry point for the slitwave tool. `args` excludes the program name.
/// Returns the process exit status; results go to --output or `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace slitwave::cli

#endif
