#include "frontal/cli_app.hpp"

int main(int argc, char** argv) { return frontal::cli::main_entry(argc, argv); }
