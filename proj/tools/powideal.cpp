#include <powideal/cli/app.hpp>

#include <iostream>

int main(int argc, char** argv) { return powideal::cli::run_cli(argc, argv, std::cout, std::cerr); }
