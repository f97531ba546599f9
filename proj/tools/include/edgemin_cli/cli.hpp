#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

namespace edgemin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitLimit = 3;
inline constexpr int kExitVerification = 4;

inline constexpr const char* kThreadsEnvVar = "EDGEMIN_THREADS";

inline constexpr const char* kBenchCsvHeader =
    "model,n,parameter,seed,input_edges,sa_edges,exact_edges,sa_runtime_ms,ilp_runtime_ms,method";

inline constexpr std::size_t kDefaultOrbitMaxN = 12;
inline constexpr std::size_t kDefaultIlpMaxN = 10;

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Primary output goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace edgemin::cli
