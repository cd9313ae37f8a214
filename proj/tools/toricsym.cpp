#include "toricsym/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return toricsym::cli::run(argc, argv, std::cout, std::cerr);
}
