#include <iostream>

#include "chordlab/cli.hpp"

int main(int argc, char** argv) {
  return chordlab::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
