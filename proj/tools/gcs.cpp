#include <iostream>
#include <string>
#include <vector>

#include "gcs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  gcs::CommandResult result = gcs::run_cli(args);
  std::cout << result.out;
  std::cerr << result.log;
  return result.exit_code;
}
