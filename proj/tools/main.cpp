#include <iostream>
#include <string>
#include <vector>

#include "infgon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return infgon::cli_dispatch(args, std::cout, std::cerr);
}
