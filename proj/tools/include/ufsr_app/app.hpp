#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ufsr::app {

enum class Format { Text, Json };

struct Request {
  std::string command;
  std::string spec_path;
  std::optional<std::string> element;
  Format format = Format::Text;
  std::uint64_t seed = 0;
  unsigned cap = 16;
  unsigned max_gens = 3;
  unsigned samples = 200;
  /// Census field: "F2", "F3" or "mixed".
  std::string field = "mixed";
  /// verify-paper: directory overriding the built-in specs.
  std::string specs_dir;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;
inline constexpr int kCheckFailed = 3;

struct Outcome {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command. Never throws: library errors become exit codes and a
/// message on `err`.
Outcome run(const Request& request);

const std::vector<std::string>& command_names();

}  // namespace ufsr::app
