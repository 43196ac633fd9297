#include <iostream>
#include <string>
#include <vector>

#include "coldgrav/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return coldgrav::run_cli(args, std::cout, std::cerr);
}
