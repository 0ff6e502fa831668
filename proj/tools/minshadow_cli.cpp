#include <iostream>

#include "minshadow/cli.hpp"

int main(int argc, char** argv) {
  return minshadow::run_cli(argc, argv, std::cout, std::cerr);
}
