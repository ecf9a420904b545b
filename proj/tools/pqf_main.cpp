#include "pqf/cli.hpp"

int main(int argc, char** argv) { return pqf::run_cli(argc, argv); }
