#include <iostream>
#include <string>
#include <vector>

#include "hyp/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return hyp::cli_run(args, std::cout, std::cerr);
}
