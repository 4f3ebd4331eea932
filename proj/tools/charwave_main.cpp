#include "charwave/run.hpp"

int main(int argc, char** argv) { return charwave::run_cli(argc, argv); }
