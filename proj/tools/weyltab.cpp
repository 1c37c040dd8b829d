#include "weyltab/cli.hpp"

int main(int argc, char** argv) { return weyltab::run_cli_main(argc, argv); }
