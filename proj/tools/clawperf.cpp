#include "clawperf/cli.hpp"
#include <iostream>
#include <vector>
#include <string>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return clawperf::run_cli(args, std::cout, std::cerr);
}
