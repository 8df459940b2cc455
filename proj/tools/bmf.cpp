#include <iostream>

#include "bmf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bmf::run_cli(args, std::cout, std::cerr);
}
