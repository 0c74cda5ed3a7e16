#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "fracnet/cli_app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const bool interactive = ::isatty(STDIN_FILENO) != 0;
  try {
    const auto config = fracnet::load_config(args, fracnet::process_env(), interactive);
    return fracnet::run(config, std::cin, std::cout, std::cerr, interactive);
  } catch (const fracnet::UsageError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
    return fracnet::exit_code::kUsage;
  }
}
