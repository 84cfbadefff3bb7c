#include <iostream>
#include <vector>

#include "mdt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mdt::run(args, std::cout, std::cerr);
}
