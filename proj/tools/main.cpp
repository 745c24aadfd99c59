#include "commands.hpp"

int main(int argc, char** argv) { return qgan::cli::run(argc, argv); }
