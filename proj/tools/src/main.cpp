#include <iostream>
#include <string>
#include <vector>

#include "sheetcalc_cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sheetcalc::cli::run(args, std::cout, std::cerr);
}
