#include "s4cover/cli.hpp"

int main(int argc, char** argv) { return s4cover::cli_main(argc, argv); }
