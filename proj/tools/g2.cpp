#include <iostream>

#include "g2/cli/commands.hpp"

int main(int argc, char** argv) {
  auto r = g2::cli::run(argc, argv);
  std::cout << g2::cli::render(r);
  return r.exit_code;
}
