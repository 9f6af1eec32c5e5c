#include "hqc/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return hqc::cli::run(argc, argv, std::cout, std::cerr);
}
