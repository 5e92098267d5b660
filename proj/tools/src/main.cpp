#include <iostream>

#include "qmzv_cli/dispatch.hpp"

int main(int argc, char** argv) { return qmzv::cli::dispatch(argc, argv, std::cout, std::cerr); }
