#include <iostream>

#include "steinberg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return steinberg::cli::run(args, std::cout, std::cerr);
}
