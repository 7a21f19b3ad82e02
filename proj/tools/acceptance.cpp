#include <iostream>
#include <thread>

#include "atlas/verify.hpp"

int main() {
  const auto report = atlas::run_suite("", std::max(1u, std::thread::hardware_concurrency()));
  for (const auto& item : report.items)
    if (!item.pass) std::cout << "  failing item " << item.id << ": " << item.detail << "\n";
  for (const auto& c : report.criteria)
    std::cout << "criterion " << c.number << ": " << (c.pass ? "PASS" : "FAIL") << " - " << c.title << " ("
              << c.passed << "/" << c.items << " items, " << c.seconds << " s)\n";
  return report.pass() ? 0 : 1;
}
