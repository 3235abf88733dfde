#include "hochkit/cli.hpp"

int main(int argc, char** argv) { return hochkit::run(argc, argv); }
