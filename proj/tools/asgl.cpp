#include <iostream>

#include "asgl/cli.hpp"

int main(int argc, char** argv) {
  const auto result = asgl::run_command(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
