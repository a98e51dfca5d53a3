#include "knotkit/cli.hpp"

int main(int argc, char** argv) { return knotkit::cli::run_main(argc, argv); }
