#include <iostream>
#include <string>
#include <vector>

#include "idl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return idl::run(args, std::cout, std::cerr);
}
