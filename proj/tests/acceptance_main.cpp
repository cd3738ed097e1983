// Acceptance entry point: runs every verification criterion at a fixed
// seed and prints one pass/fail line per criterion.
#include <cstdlib>
#include <iostream>

#include "gbh/verify.hpp"

int main(int argc, char** argv) {
  unsigned seed = 7;
  if (argc > 1) seed = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
  bool ok = gbh::verify::run_all(seed, std::cout);
  return ok ? 0 : 1;
}
