#include <iostream>
#include <string>
#include <vector>

#include "fourierkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fourierkit::run_command(args, std::cout, std::cerr);
}
