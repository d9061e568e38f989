#pragma once
#include <cstddef>

#include "helly/exact/int_matrix.hpp"

namespace helly::exact {

// U * A * V = S with U, V unimodular and S diagonal, s1 | s2 | ..., all >= 0.
struct SnfResult {
  IntMatrix u, s, v;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Rank over the rationals (number of nonzero invariant factors).
std::size_t integer_rank(const IntMatrix& a);

}  // namespace helly::exact
