#include "stringyk/cli.hpp"

int main(int argc, char** argv) { return stringyk::run_cli(argc, argv); }
