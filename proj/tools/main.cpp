#include <iostream>

#include "gcdvss/harness.hpp"

int main(int argc, char** argv) {
  return gcdvss::harness::cli_main(argc, argv, std::cout, std::cerr);
}
