#include "helly/exact/relint.hpp"

#include "helly/errors.hpp"
#include "helly/exact/simplex.hpp"

namespace helly::exact {

std::optional<StrictCombination> strict_zero_combination(
    const std::vector<RatVec>& points) {
  const std::size_t k = points.size();
  if (k == 0) throw domain_error("strict_zero_combination: empty point set");
  const std::size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d)
      throw domain_error("strict_zero_combination: mixed dimensions");

  // vars: lambda_0..lambda_{k-1}, t, s_0..s_{k-1}; maximize t
  // rows: sum lambda_i * p_i = 0 (d), sum lambda_i = 1, lambda_i - t - s_i = 0
  const std::size_t nv = 2 * k + 1;
  std::vector<RatVec> a;
  RatVec b;
  for (std::size_t c = 0; c < d; ++c) {
    RatVec row(nv, Rat(0));
    for (std::size_t i = 0; i < k; ++i) row[i] = points[i][c];
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  {
    RatVec row(nv, Rat(0));
    for (std::size_t i = 0; i < k; ++i) row[i] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  for (std::size_t i = 0; i < k; ++i) {
    RatVec row(nv, Rat(0));
    row[i] = 1;
    row[k] = -1;
    row[k + 1 + i] = -1;
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  RatVec c(nv, Rat(0));
  c[k] = 1;

  LpResult lp = maximize(a, b, c);
  if (lp.status != LpStatus::optimal || lp.value <= 0) return std::nullopt;
  StrictCombination out;
  out.coefficients.assign(lp.solution.begin(),
                          lp.solution.begin() + static_cast<long>(k));
  return out;
}

}  // namespace helly::exact
