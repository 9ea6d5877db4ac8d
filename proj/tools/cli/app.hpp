#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "motivic/chowprod.hpp"

namespace motive {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,        // verification failures, unexpected internal errors
  exit_invalid = 2,        // bad arguments, parse errors
  exit_resource = 3,       // refused by the resource bound
};

/// Default limits; both are lifted by --force.
inline constexpr std::int64_t kMaxDegree = 32;          // p^n
inline constexpr std::int64_t kMaxGrassmannRank = 20000;  // C(p^n, p^m)

/// Empty when (p, n, m) is within the limits, otherwise the reason for refusing.
std::string resource_refusal(int p, int n, int m);

/// Thread count from --threads, else MOTIVE_THREADS, else 1.
int resolve_threads(int flag_value);

/// Runs the command line; output goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motive
