#include <iostream>
#include <string>
#include <vector>

#include "ualg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ualg::run_command(args, std::cout, std::cerr);
}
