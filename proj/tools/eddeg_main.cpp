#include <iostream>

#include "eddeg/cli.hpp"

int main(int argc, char** argv) {
  return eddeg::run_cli(argc, argv, std::cout, std::cerr);
}
