#include "treeshift/cli.hpp"

int main(int argc, char** argv) { return treeshift::cli::dispatch(argc, argv); }
