#include <iostream>
#include <string>
#include <vector>

#include "halfball/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return halfball::cli::main_entry(args, std::cout, std::cerr);
}
