#include "fwe/cli.hpp"

int main(int argc, char** argv) { return fwe::run_command(argc, argv); }
