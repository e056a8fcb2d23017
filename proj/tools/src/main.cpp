#include <iostream>
#include <string>
#include <vector>

#include "oddcycles/cli/app.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return oddcycles::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
