#include <iostream>

#include "torsionlab/cli/cli.hpp"

int main(int argc, char** argv) {
  return torsionlab::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
