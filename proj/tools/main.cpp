#include <string>
#include <vector>

#include "hrhlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hrhlab::cli_main(args);
}
