#include <iostream>

#include "swing/cli/cli.hpp"

int main(int argc, char** argv) {
  return swing::execute(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
