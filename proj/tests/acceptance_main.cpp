#include <iostream>
#include "trib/verify/acceptance.hpp"
int main() { return trib::verify::all_passed(trib::verify::run_acceptance(std::cout)) ? 0 : 1; }
