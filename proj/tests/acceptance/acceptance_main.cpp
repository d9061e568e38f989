#include <algorithm>
#include <chrono>
#include <iostream>

#include "acceptance.hpp"

namespace acceptance {

SharedState& shared_state() {
  static SharedState s;
  return s;
}

}  // namespace acceptance

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<acceptance::Criterion> all;
  for (auto&& group :
       {acceptance::abelian_criteria(), acceptance::torus_criteria(),
        acceptance::rank2_criteria(), acceptance::actions_criteria()})
    for (auto&& c : group) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.number < b.number; });

  int failures = 0;
  for (const auto& c : all) {
    std::ostringstream detail;
    auto start = clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << " exception: " << e.what();
    }
    auto secs =
        std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() -
                                                                  start)
            .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": "
              << c.title;
    std::string extra = detail.str();
    if (!extra.empty()) std::cout << " [" << extra << "]";
    std::cout << " (" << secs << "s)\n";
    std::cout.flush();
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
