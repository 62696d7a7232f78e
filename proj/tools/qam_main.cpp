#include <iostream>
#include <string>
#include <vector>

#include "qam/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qam::cli_dispatch(args, std::cout, std::cerr);
}
