#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "hoco/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hoco::cli::run(std::move(args), std::cout, std::cerr);
}
