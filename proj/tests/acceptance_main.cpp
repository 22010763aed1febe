// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <iostream>

#include "girr/acceptance.hpp"

int main() {
  const auto run = girr::run_acceptance({});
  for (const auto& c : run.criteria) {
    std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << " [" << c.detail
              << "]\n";
  }
  for (const auto& note : run.notes) std::cout << "note: " << note << '\n';
  return run.all_pass() ? 0 : 1;
}
