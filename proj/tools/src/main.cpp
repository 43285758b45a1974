#include <iostream>

#include "opinfo_cli/app.hpp"

int main(int argc, char** argv) { return opinfo::cli::run(argc, argv, std::cout, std::cerr); }
