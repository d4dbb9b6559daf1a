#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dynfpt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInvariant = 2;

struct ReplayOptions {
  // Empty means every problem the stream queries.
  std::vector<std::string> problems;
  std::optional<std::size_t> max_degree;
  bool verbose = false;
  // Rebuild and solve from scratch on every query instead of maintaining
  // the dynamic structures.
  bool static_mode = false;
  // Extra column with the running total of the micros column.
  bool cumulative = false;
};

const std::vector<std::string>& known_problems();

// Replays an update stream, writing one CSV row per record to out and
// diagnostics to err. Returns the process exit code.
int replay(std::istream& in, std::ostream& out, std::ostream& err, const ReplayOptions& options);

// Feeds an edge list through the dynamic cluster deletion structure and
// prints the forced vertices, the kernel size and the kernel edges.
int kernelize_cvd(std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dynfpt::cli
