#include <iostream>
#include <string>
#include <vector>

#include "crjet_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return crjet::cli::run(args, std::cout, std::cerr);
}
