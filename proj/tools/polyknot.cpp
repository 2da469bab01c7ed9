#include <iostream>
#include <string>
#include <vector>

#include "polyknot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyknot::run_cli(args, std::cout, std::cerr);
}
