#include <iostream>

#include "tatebc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tatebc::run_cli(args, std::cout, std::cerr);
}
