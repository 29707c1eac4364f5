#include <iostream>
#include <string>
#include <vector>

#include "luk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return luk::run(args, std::cout, std::cerr);
}
