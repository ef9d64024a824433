#include <iostream>
#include <string>
#include <vector>

#include "afcore/cli.hpp"

int main(int argc, char** argv) {
  return afcore::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
