#include <iostream>

#include "postlie/cli.hpp"

int main(int argc, char** argv) { return postlie::cli::run(argc, argv, std::cout, std::cerr); }
