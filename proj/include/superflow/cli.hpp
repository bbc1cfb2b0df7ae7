#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "superflow/acceptance.hpp"
#include "superflow/error.hpp"

namespace superflow {

enum class Command { classify, solve, verify_flow, verify_pde, orbits, symmetry, selftest };
enum class OutputFormat { tsv, json, text };

struct RunConfig {
  Command command = Command::selftest;
  std::optional<std::pair<int, int>> m;  // single m is lo == hi
  int k = 1;
  std::string family;                    // flow or symmetry family; empty runs all
  std::optional<std::size_t> samples;
  std::uint64_t seed = kAcceptanceSeed;
  std::optional<double> tol;
  std::string out_path;                  // empty writes to the given stream
  OutputFormat format = OutputFormat::text;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEngineError = 3;

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

Command parse_command(const std::string& text);
OutputFormat parse_format(const std::string& text);
/// "7" or "3..20".
std::pair<int, int> parse_m_range(const std::string& text);

/// Runs the command, writing the report to `out` (or config.out_path) and
/// diagnostics to `err`. Returns one of the kExit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace superflow
