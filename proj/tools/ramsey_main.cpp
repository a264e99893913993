#include <iostream>

#include "ramsey/cli.hpp"

int main(int argc, char** argv) {
  return ramsey::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
