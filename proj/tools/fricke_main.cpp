#include <iostream>
#include <string>
#include <vector>

#include "fricke/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fricke::run(args, std::cout, std::cerr);
}
