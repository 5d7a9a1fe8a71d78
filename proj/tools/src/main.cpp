#include <iostream>

#include "hankelkit/cli/cli.hpp"

int main(int argc, char** argv) {
  return hankelkit::cli::run(argc, argv, std::cout, std::cerr);
}
