#include <iostream>

#include "termgraph/service/cli.hpp"

int main(int argc, char** argv) {
  return termgraph::service::run_cli(argc, argv, std::cout, std::cerr);
}
