#include <string>
#include <utility>
#include <vector>

#include "driftstream/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return driftstream::run_command(std::move(args));
}
