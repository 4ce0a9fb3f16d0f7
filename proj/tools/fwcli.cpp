#include "fw/cli_app.hpp"

int main(int argc, char** argv) { return fw::cli::run(argc, argv); }
