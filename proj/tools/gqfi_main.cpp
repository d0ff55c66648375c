#include "gqfi/cli.hpp"

int main(int argc, char** argv) { return gqfi::cli::run(argc, argv); }
