#include <iostream>
#include <vector>

#include "cla/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cla::run_cli(args, std::cout, std::cerr);
}
