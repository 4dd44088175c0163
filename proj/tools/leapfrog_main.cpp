#include "leapfrog/cli.hpp"

int main(int argc, char** argv) { return leapfrog::cli_main(argc, argv); }
