#include <iostream>
#include <string>
#include <vector>

#include "quasinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quasinv::run_cli(args, std::cout, std::cerr);
}
