#include <iostream>

#include "moebius/cli.hpp"

int main(int argc, char** argv) { return moebius::run(argc, argv, std::cout); }
