#include <iostream>

#include "nashseq/cli.hpp"

int main(int argc, char** argv) { return nashseq::cli::run(argc, argv, std::cout, std::cerr); }
