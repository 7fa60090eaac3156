#include <iostream>
#include <string>
#include <vector>

#include "fnt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fnt::run_cli(args, std::cout, std::cerr);
}
