#include "conehankel/cli.hpp"

int main(int argc, char** argv) { return conehankel::cli::run_main(argc, argv); }
