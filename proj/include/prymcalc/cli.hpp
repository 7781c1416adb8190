#pragma once

// The verification driver behind the prymcalc command-line tool.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace prymcalc::cli {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::string command = "all";  // verify-lines, verify-transversality, verify-pencil24,
                                // verify-intersection, verify-quartic-fuzz, all
  std::vector<std::uint32_t> primes{10007, 31991};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::string out;              // empty: JSON goes to stdout
  std::size_t fuzz_count = 10000;
  bool quiet = false;
};

/// Thrown for bad flags or values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct CheckEntry {
  std::string id;
  std::string anchor;           // the claim being checked, in words
  Status status = Status::fail;
  nlohmann::ordered_json payload;
  double wall_ms = 0;
};

struct Report {
  std::string version = kVersion;
  std::vector<CheckEntry> checks;
  bool passed() const;
  /// Keys in fixed order; timing fields only when asked for.
  nlohmann::ordered_json to_json(bool with_timing = true) const;
  std::string summary_table() const;
};

/// Validates primes (prime, > 1000, < 2^31) and the command; throws UsageError.
void validate(const RunConfig& config);

Report run(const RunConfig& config);

/// Parses argv (argv[0] is the program name); throws UsageError, or returns
/// false with help text written to out when --help was given.
bool parse_args(const std::vector<std::string>& args, RunConfig& config, std::ostream& out);

/// The whole tool: parse, run, write outputs, return the exit code
/// (0 pass, 1 check failure, 2 usage, 3 internal).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prymcalc::cli
