#include "lbr/cli.hpp"

int main(int argc, char** argv) { return lbr::cli::main_entry(argc, argv); }
