#pragma once
#include <optional>
#include <vector>

#include "helly/exact/int_matrix.hpp"

namespace helly::exact {

// A particular solution of A x = b together with a lattice basis of
// { x : A x = 0 }.
struct IntegerSolution {
  IntVec particular;
  std::vector<IntVec> kernel;
};

// Solve A x = b over the integers; std::nullopt when unsolvable.
std::optional<IntegerSolution> solve_integer_linear(const IntMatrix& a,
                                                    const IntVec& b);

}  // namespace helly::exact
