#include <iostream>

#include "ehpcalc/cli.hpp"

int main(int argc, char** argv) {
  return ehpcalc::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
