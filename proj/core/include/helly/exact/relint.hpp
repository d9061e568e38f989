#pragma once
#include <optional>
#include <vector>

#include "helly/exact/numbers.hpp"

namespace helly::exact {

// Positive rational coefficients summing to one.
struct StrictCombination {
  RatVec coefficients;
};

// A strictly positive convex combination of the points equal to zero, i.e. a
// certificate that 0 lies in the relative interior of their convex hull.
// Solved as an exact LP maximizing the minimum coefficient.
std::optional<StrictCombination> strict_zero_combination(
    const std::vector<RatVec>& points);

}  // namespace helly::exact
