#include <iostream>

#include "solw_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return solw::cli::run(args, std::cout, std::cerr);
}
