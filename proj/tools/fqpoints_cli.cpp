#include <iostream>
#include <string>
#include <vector>

#include "fqpoints/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const fqp::cli::Outcome outcome = fqp::cli::run(args, std::cin);
  std::cout << outcome.out << std::flush;
  std::cerr << outcome.err << std::flush;
  return outcome.status;
}
