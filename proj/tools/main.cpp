#include <string>
#include <vector>

#include "eqdom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eqdom::cli::run(args);
}
