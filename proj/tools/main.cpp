#include "exlat/cli.hpp"

int main(int argc, char** argv) { return exlat::cli::main(argc, argv); }
