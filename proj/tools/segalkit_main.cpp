#include <iostream>

#include "segalkit/cli.hpp"

int main(int argc, char** argv) {
  return segalkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
