#include <iostream>
#include <string>
#include <vector>

#include "prymcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return prymcalc::cli::main_entry(args, std::cout, std::cerr);
}
