#include "qbohr/cli.hpp"

int main(int argc, char** argv) { return qbohr::cli_main(argc, argv); }
