#include "brauer/report.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return brauer::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
