#include <iostream>

#include "teinv/cli.hpp"

int main(int argc, char** argv) {
  return teinv::cli::run(argc, argv, std::cout, std::cerr);
}
