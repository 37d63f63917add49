#include "qalg/cli.hpp"

int main(int argc, char** argv) { return qalg::cli::run_main(argc, argv); }
