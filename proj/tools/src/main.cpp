#include <iostream>
#include <string>
#include <vector>

#include "suliciu_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return suliciu::tools::run_cli(args, std::cout, std::cerr);
}
