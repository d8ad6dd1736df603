#include <iostream>
#include <string>
#include <vector>

#include "chaoswm_tools/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chaoswm::tools::run_cli(args, std::cout, std::cerr);
}
