// quotkit command-line entry point.
#include <iostream>
#include <string>
#include <vector>

#include "quotkit/qk/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quotkit::qk::run_cli(args, std::cout, std::cerr);
}
