#include "vucb/harness.hpp"

int main(int argc, char** argv) { return vucb::cli_dispatch(argc, argv); }
