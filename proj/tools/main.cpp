#include <iostream>

#include "bgm/cli.hpp"

int main(int argc, char** argv) { return bgm::run_cli({argv + 1, argv + argc}, std::cout, std::cerr); }
