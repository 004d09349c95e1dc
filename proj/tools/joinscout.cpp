#include <iostream>
#include <string>
#include <vector>

#include "joinscout/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return joinscout::cli::run(args, std::cout, std::cerr);
}
