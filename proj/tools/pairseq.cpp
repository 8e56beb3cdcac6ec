#include <iostream>
#include <string>
#include <vector>

#include "pairseq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pairseq::cli::run(args, std::cout, std::cerr);
}
