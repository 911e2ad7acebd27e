#include <iostream>
#include <string>
#include <vector>

#include "pa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pa::run_cli(args, std::cout, std::cerr);
}
