#include <iostream>
#include <string>
#include <vector>

#include "qflag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qflag::run_cli(args, std::cin, std::cout, std::cerr);
}
