#include "spectre/cli.hpp"

int main(int argc, char** argv) { return spectre::cli::run(argc, argv); }
