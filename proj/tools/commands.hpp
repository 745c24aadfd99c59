#pragma once

namespace qgan::cli {

/// Dispatches qgan subcommands (train | sweep | fit | report).
/// Exit codes: 0 success, 1 usage/config error, 2 runtime failure.
int run(int argc, char** argv);

}  // namespace qgan::cli
