#include "novikov/cli.hpp"

int main(int argc, char** argv) { return nov::run_cli(argc, argv); }
