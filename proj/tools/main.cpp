#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "stream_runner.hpp"

namespace {

// Runs f on the named file, or on standard input for "-".
template <typename F>
int with_input(const std::string& path, F&& f) {
  if (path == "-") return f(std::cin);
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << '\n';
    return dynfpt::cli::kExitInput;
  }
  return f(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully dynamic parameterized graph problems"};
  app.require_subcommand(1);

  dynfpt::cli::ReplayOptions options;
  std::string input = "-";
  std::string mode = "dynamic";
  const std::vector<std::string>& problems = dynfpt::cli::known_problems();

  auto add_stream_options = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Stream file ('-' for stdin)");
    cmd->add_option("--problems", options.problems, "Problems to maintain (default: those queried)")
        ->delimiter(',')
        ->check(CLI::IsMember(problems));
    cmd->add_option("--max-degree", options.max_degree, "Degree bound, required for fvs");
    cmd->add_flag("--verbose", options.verbose, "Append the solution vertices");
  };

  auto* replay = app.add_subcommand("replay", "Replay an update stream and answer its queries");
  add_stream_options(replay);

  auto* bench = app.add_subcommand("bench", "Time a stream with dynamic structures or static recomputation");
  add_stream_options(bench);
  bench->add_option("--mode", mode, "dynamic or static")->check(CLI::IsMember({"dynamic", "static"}));

  auto* kernelize = app.add_subcommand("kernelize-cvd", "Cluster vertex deletion kernel of an edge list");
  kernelize->add_option("input", input, "Edge list file ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dynfpt::cli::kExitInput;
  }

  if (*kernelize) {
    return with_input(input, [](std::istream& in) { return dynfpt::cli::kernelize_cvd(in, std::cout, std::cerr); });
  }
  if (*bench) {
    options.static_mode = mode == "static";
    options.cumulative = true;
  }
  return with_input(input, [&](std::istream& in) { return dynfpt::cli::replay(in, std::cout, std::cerr, options); });
}
