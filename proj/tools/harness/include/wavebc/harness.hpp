#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavebc/manufactured.hpp"
#include "wavebc/reflection.hpp"

namespace wavebc::cli {

enum class Command { Analyze, Solve, Table1, Table2, Growth, Forcing, Roots };

std::string_view to_string(Command c);

/// A flag or config key that the tool does not know.
class UnknownFlag : public std::runtime_error {
 public:
  explicit UnknownFlag(const std::string& key);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// A known key with a value that does not parse or is out of range.
class InvalidValue : public std::runtime_error {
 public:
  InvalidValue(const std::string& key, const std::string& why);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

enum class SolveProblem { Pulse, Traveling, Surface };
enum class MonitorKind { MaxNorm, Error };
enum class SnapshotFormat { None, Matrix, Columnar };

/// Fully resolved run configuration. Every field has a value after parsing;
/// command-specific defaults follow the reference experiments (dt = 0.5 h,
/// omega0 = 8 pi, L = 0.03, t0 = 0.2).
struct RunConfig {
  Command command = Command::Analyze;

  // analyze
  std::string bc;               // type1..type4, coupled
  double a = 1.0;               // type1
  double b1 = 0.0;              // coupled
  double b2 = 0.0;

  // boundary coefficient at x = 0, as text: "0", "0.5", "i0.5"
  std::vector<std::string> b;

  std::vector<double> h;
  double courant = 0.5;
  double t_end = 0.0;
  double every = 0.0;
  std::vector<double> beta;
  double omega0 = 0.0;
  double width = 0.03;
  double t0 = 0.2;
  ForcingVariant variant = ForcingVariant::G;
  SolveProblem problem = SolveProblem::Pulse;
  MonitorKind monitor = MonitorKind::MaxNorm;
  SnapshotFormat snapshot = SnapshotFormat::None;
  ReflectionCase reflection = ReflectionCase::Loss;
  int n = 5;
  std::string out = ".";

  bool operator==(const RunConfig&) const = default;
};

/// Parses `args` (without the program name): the command first, then
/// `--key value` flags. `--config <file>` reads flat `key=value` lines; flags
/// override file values, which override defaults.
RunConfig parse_config(const std::vector<std::string>& args);

/// Parses a config document (as written by serialize()) plus optional
/// overriding flags.
RunConfig parse_config_text(const std::string& text, const std::vector<std::string>& args = {});

/// Flat `key=value` lines, one per field, numbers in shortest round-trip form.
std::string serialize(const RunConfig& cfg);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

/// `<command>-<16 hex digits of fnv1a64(serialize(cfg) without out)>`.
std::string artifact_stem(const RunConfig& cfg);

BoundaryCoefficient parse_coefficient(const std::string& text);

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDiverged = 3,
  kExitAnalysisFailure = 4,
  kExitIo = 5,
};

struct DispatchResult {
  int exit_code = kExitOk;
  std::filesystem::path artifact;
  std::vector<std::string> messages;
};

/// Runs the command, writes the artifact and appends to `<out>/manifest.txt`.
/// Throws std::filesystem::filesystem_error or IoError on write failures.
DispatchResult dispatch(const RunConfig& cfg);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full command line entry point: parses, dispatches, maps errors to exit codes
/// and writes human-readable messages to `out` / `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wavebc::cli
