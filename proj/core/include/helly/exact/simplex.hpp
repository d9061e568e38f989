#pragma once
#include <vector>

#include "helly/exact/numbers.hpp"

namespace helly::exact {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status;
  RatVec solution;  // empty unless optimal
  Rat value;
};

// maximize c.x subject to A x = b, x >= 0, over exact rationals.
// Two-phase simplex with Bland's rule; terminates on every input.
LpResult maximize(const std::vector<RatVec>& a, const RatVec& b,
                  const RatVec& c);

}  // namespace helly::exact
