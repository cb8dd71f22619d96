#include <iostream>
#include <string>
#include <vector>

#include "gray16/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gray16::cli::run(args, std::cout, std::cerr);
}
