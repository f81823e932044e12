#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bratteli::cli::Environment env;
  env.terminal = ::isatty(STDOUT_FILENO) != 0;
  env.no_color = std::getenv("NO_COLOR") != nullptr;
  const int code = bratteli::cli::run(args, std::cout, std::cerr, env);
  std::cout.flush();
  if (!std::cout) return bratteli::cli::kUsageError;
  return code;
}
