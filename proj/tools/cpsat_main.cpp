#include <iostream>

#include "cpsat/cli.hpp"

int main(int argc, char** argv) {
  return cpsat::cli::run_cli(argc, argv, std::cout, std::cerr);
}
