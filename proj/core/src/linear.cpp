#include "helly/exact/linear.hpp"

#include "helly/errors.hpp"
#include "helly/exact/snf.hpp"

namespace helly::exact {

std::optional<IntegerSolution> solve_integer_linear(const IntMatrix& a,
                                                    const IntVec& b) {
  if (a.rows() != b.size()) throw domain_error("solve: rhs length mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  SnfResult f = smith_normal_form(a);
  IntVec c = mat_vec(f.u, b);
  const std::size_t dim = m < n ? m : n;

  IntVec y(n, Int(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (i < dim && f.s.at(i, i) != 0) {
      if (c[i] % f.s.at(i, i) != 0) return std::nullopt;
      y[i] = c[i] / f.s.at(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }

  IntegerSolution sol;
  sol.particular = mat_vec(f.v, y);
  for (std::size_t j = 0; j < n; ++j) {
    bool free_col = j >= dim || f.s.at(j, j) == 0;
    if (free_col) sol.kernel.push_back(f.v.col(j));
  }
  return sol;
}

}  // namespace helly::exact
