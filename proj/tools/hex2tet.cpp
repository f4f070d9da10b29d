#include "hextet/io.hpp"

int main(int argc, char** argv) { return hextet::cli_main(argc, argv); }
