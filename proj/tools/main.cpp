#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wgap::cli::runCommand(args, wgap::cli::configFromEnvironment(), std::cout,
                               std::cerr);
}
