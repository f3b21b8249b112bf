#include <vector>

#include "latcosine/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latcosine::cli_dispatch(args);
}
