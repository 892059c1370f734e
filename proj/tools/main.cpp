#include <iostream>
#include <string>
#include <vector>

#include "avla/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return avla::run(args, std::cout, std::cerr);
}
