#include "qho/cli.hpp"

int main(int argc, char** argv) { return qho::cli_main(argc, argv); }
