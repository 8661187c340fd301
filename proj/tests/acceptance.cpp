#include <iostream>

#include "knotzeros/verify.hpp"

int main() {
  const auto results = knotzeros::run_acceptance({});
  knotzeros::print_results(std::cout, results);
  return knotzeros::all_passed(results) ? 0 : 1;
}
