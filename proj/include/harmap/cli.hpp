#pragma once

namespace harmap {

// Entry point of the harmap command line; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace harmap
