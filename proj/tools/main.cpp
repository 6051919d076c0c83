#include "superpattern_cli.hpp"

int main(int argc, char** argv) { return superpat::cli::run(argc, argv); }
