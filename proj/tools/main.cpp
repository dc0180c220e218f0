#include <iostream>
#include <string>
#include <vector>

#include "polyform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyform::run_command(args, std::cout, std::cerr);
}
