#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shadow/geometry.hpp"

namespace shadow::cli {

enum class Command { solve, verify, lemma2, khudai2d };

/// Exit codes shared by every command.
enum ExitCode : int { kVerified = 0, kFailed = 1, kInputError = 2 };

struct RunConfig {
  Command command = Command::solve;
  std::optional<std::string> domain_path;
  std::optional<std::string> config_path;
  std::vector<double> point;
  BallMode mode = BallMode::closed;
  /// Minimum certificate margin accepted (solve, lemma2); the layout margin
  /// angle for khudai2d.
  std::optional<double> margin;
  /// Sampling-oracle directions; 0 disables the oracle.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;
  std::optional<std::string> cert_path;
  std::optional<std::string> svg_path;
  std::optional<std::string> mesh_path;
  std::optional<double> epsilon;
  std::optional<double> delta;
};

/// "x,y" or "x,y,z" into coordinates; throws Error(invalid_argument).
std::vector<double> parse_point(const std::string& text);

int cmd_solve(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_lemma2(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_khudai2d(const RunConfig& rc, std::ostream& out, std::ostream& err);

int run(const RunConfig& rc, std::ostream& out, std::ostream& err);

}  // namespace shadow::cli
