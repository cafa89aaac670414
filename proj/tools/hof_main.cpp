#include "hof/cli.hpp"

int main(int argc, char** argv) { return hof::run_cli(argc, argv); }
