#include <iostream>
#include <string>
#include <vector>

#include "polyemden/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyemden::run(args, std::cout, std::cerr);
}
