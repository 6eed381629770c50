#include <iostream>
#include <string>
#include <vector>

#include "itc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return itc::RunCli(args, std::cout, std::cerr);
}
