#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace treeshift::cli {

enum class Format { Csv, Json, Text };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the default working precision.
inline constexpr const char* kPrecisionEnv = "TREESHIFT_PRECISION";

struct RunConfig {
  unsigned precision_bits = 256;
  std::size_t exact_digit_cap = 1'000'000;
  Format output_format = Format::Text;
  std::optional<std::string> matrix_path;
  std::uint64_t seed = 0;
  /// Presentation only: entropies are shown in bits instead of nats.
  bool log2 = false;
  std::optional<std::string> out_path;
};

/// One compared value of the reproduction report.
struct Cell {
  std::string section;
  std::string name;
  std::string expected;  // as printed
  std::string computed;
  /// Printed value known to be wrong; reported with a diff, not counted as a failure.
  bool erratum = false;
  bool pass = false;
};

struct ReproduceReport {
  std::vector<Cell> cells;
  bool all_pass() const;
};

ReproduceReport reproduce_paper(const RunConfig& cfg);

/// Parses and runs one command line. Never throws; returns an exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv);

}  // namespace treeshift::cli
