#include "varden/cli.hpp"

int main(int argc, char** argv) { return varden::cli_main(argc, argv); }
