#include <iostream>

#include "eitff/cli.hpp"

int main(int argc, char** argv) {
  return eitff::cli::run(argc, argv, std::cout, std::cerr);
}
