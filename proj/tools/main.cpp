#include "cli.hpp"

int main(int argc, char** argv) { return realgas::cli_main(argc, argv); }
