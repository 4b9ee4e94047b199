#include <iostream>

#include "cssplit/cli.hpp"

int main(int argc, char** argv) {
  return cssplit::cli::run(argc, argv, std::cout, std::cerr);
}
