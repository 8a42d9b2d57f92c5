#include "jcheck/cli.hpp"

int main(int argc, char** argv) { return jcheck::cli::run(argc, argv); }
