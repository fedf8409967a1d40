#include <iostream>

#include "tpa_cli/cli.hpp"

int main(int argc, char** argv) {
  const auto r = tpa::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit;
}
