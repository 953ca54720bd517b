#include <iostream>
#include <string>
#include <vector>

#include "pickett/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pickett::cli::run_command(args, std::cout, std::cerr);
}
