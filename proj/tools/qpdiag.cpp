#include <iostream>

#include "qpd/cli.hpp"

int main(int argc, char** argv) {
  return qpd::run_cli(argc, argv, std::cout, std::cerr);
}
