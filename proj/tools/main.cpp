#include "erastar/cli.hpp"

int main(int argc, char** argv) { return erastar::cli_main(argc, argv); }
