#include "malle/cli.hpp"

int main(int argc, char** argv) { return malle::cli::run(argc, argv); }
