// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exit code 0 iff all criteria pass.
#include <cstdlib>
#include <iostream>

#include "mdsa/cli.hpp"

int main(int argc, char** argv) {
    // keep the suite hermetic: an isolated cache directory unless overridden
    std::string cache_dir = "mdsa-acceptance-cache";
    if (argc > 2 && std::string(argv[1]) == "--cache") cache_dir = argv[2];
    return mdsa::run_command({"--cache", cache_dir, "verify", "all"}, std::cout,
                             std::cerr);
}
