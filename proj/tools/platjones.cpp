#include <iostream>
#include <string>
#include <vector>

#include "platjones/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = platjones::cli::run_args(args);
  std::cout << result.output;
  if (!result.output.empty() && result.output.back() != '\n') std::cout << '\n';
  return result.exit_code;
}
