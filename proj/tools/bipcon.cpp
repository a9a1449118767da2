#include <iostream>
#include <string>
#include <vector>

#include "bipcon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bipcon::cli::run(args, std::cout, std::cerr);
}
