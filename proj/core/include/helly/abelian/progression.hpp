#pragma once
#include <optional>
#include <vector>

#include "helly/exact/numbers.hpp"

namespace helly::abelian {

// Residue class a + mZ. m = 0 encodes the singleton {a}; m = 1 is all of Z.
struct ArithmeticProgression {
  exact::Int a;
  exact::Int m;  // >= 0; 0 <= a < m whenever m >= 1

  static ArithmeticProgression make(exact::Int a, exact::Int m);
  bool contains(const exact::Int& x) const;
};

std::optional<ArithmeticProgression> intersect_progressions(
    const std::vector<ArithmeticProgression>& progs);

}  // namespace helly::abelian
