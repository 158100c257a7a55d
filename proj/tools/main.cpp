#include <iostream>
#include <string>
#include <vector>

#include "lpalab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lpa::run(args, std::cout, std::cerr);
}
