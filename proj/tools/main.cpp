#include "harmap/cli.hpp"

int main(int argc, char** argv) { return harmap::run_cli(argc, argv); }
