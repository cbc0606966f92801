#include <iostream>

#include "polarnd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polarnd::dispatch(args, std::cout, std::cerr);
}
