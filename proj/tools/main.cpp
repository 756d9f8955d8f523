#include "cli.hpp"

int main(int argc, char** argv) { return fairclique::cli::run_cli(argc, argv); }
