#include <iostream>
#include <string>
#include <vector>

#include "bosent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bosent::cli::run(args, std::cout, std::cerr);
}
