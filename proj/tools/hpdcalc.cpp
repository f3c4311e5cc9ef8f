#include <iostream>
#include <string>
#include <vector>

#include "hpd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hpd::cli::run(std::move(args), std::cout, std::cerr);
}
