#include <iostream>
#include <string>
#include <vector>

#include "nilsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilsym::cli::run(args, std::cout, std::cerr);
}
