#include <iostream>
#include <string>
#include <vector>

#include "sortcut/cli/app.hpp"

int main(int argc, char** argv) {
  return sortcut::cli::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
