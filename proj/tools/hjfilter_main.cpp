#include "hjfilter/cli.hpp"

int main(int argc, char** argv) { return hj::cli::main(argc, argv); }
