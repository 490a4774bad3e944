#include <iostream>

#include "fsplit/cli.hpp"

int main(int argc, char** argv) {
  return fsplit::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
