#include <unistd.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eqc/cli.hpp"

int main(int argc, char** argv) {
  std::string stdin_data;
  if (!isatty(fileno(stdin))) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    stdin_data = buf.str();
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return eqc::run_cli(args, std::cout, std::cerr, stdin_data);
}
