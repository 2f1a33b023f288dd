// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is 0 iff all criteria pass.
#include <cstdlib>
#include <iostream>

#include "orbihrr/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  for (const auto& r : orbihrr::acceptance::run_all(seed)) {
    std::cout << orbihrr::acceptance::format_line(r) << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
