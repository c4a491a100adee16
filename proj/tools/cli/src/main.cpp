#include <iostream>

#include "giantwg/cli/app.hpp"

int main(int argc, char** argv) { return giantwg::cli::run_app(argc, argv, std::cout, std::cerr); }
