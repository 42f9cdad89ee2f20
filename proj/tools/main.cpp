#include <iostream>
#include <string>
#include <vector>

#include "loopkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loopkit::cli::run(args, std::cout, std::cerr);
}
