#include <iostream>
#include <string>
#include <vector>

#include "hangword/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hangword::run_cli(args, std::cout, std::cerr);
}
