#include "millionaire/cli.hpp"

int main(int argc, char** argv) { return millionaire::run(argc, argv); }
