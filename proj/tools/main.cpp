#include <iostream>
#include <string>
#include <vector>

#include "subshift/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return subshift::cli_main(std::move(args), std::cout, std::cerr);
}
