#include "helly/exact/simplex.hpp"

#include "helly/errors.hpp"

namespace helly::exact {

namespace {

// Dense tableau; basis[i] is the variable owning row i.
struct Tableau {
  std::size_t rows, vars;
  std::vector<RatVec> t;  // rows x (vars + 1), rhs last
  RatVec z;               // reduced costs, vars entries
  Rat z0;                 // objective constant
  std::vector<std::size_t> basis;

  Rat& rhs(std::size_t i) { return t[i][vars]; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rat inv = t[pr][pc];
    for (auto& v : t[pr]) v /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr || t[i][pc] == 0) continue;
      Rat f = t[i][pc];
      for (std::size_t j = 0; j <= vars; ++j) t[i][j] -= f * t[pr][j];
    }
    if (z[pc] != 0) {
      Rat f = z[pc];
      for (std::size_t j = 0; j < vars; ++j) z[j] -= f * t[pr][j];
      z0 -= f * t[pr][vars];
    }
    basis[pr] = pc;
  }

  // Bland's rule; returns false when no improving column remains.
  bool step() {
    std::size_t enter = vars;
    for (std::size_t j = 0; j < vars; ++j)
      if (z[j] > 0) {
        enter = j;
        break;
      }
    if (enter == vars) return false;
    std::size_t leave = rows;
    Rat best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = rhs(i) / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) throw domain_error("simplex: unbounded");
    pivot(leave, enter);
    return true;
  }

  void run() {
    while (step()) {
    }
  }
};

}  // namespace

LpResult maximize(const std::vector<RatVec>& a, const RatVec& b,
                  const RatVec& c) {
  const std::size_t m = a.size(), n = c.size();
  for (const auto& row : a)
    if (row.size() != n) throw domain_error("simplex: ragged constraint row");
  if (b.size() != m) throw domain_error("simplex: rhs size mismatch");

  Tableau tb;
  tb.rows = m;
  tb.vars = n + m;  // artificials appended
  tb.t.assign(m, RatVec(tb.vars + 1, Rat(0)));
  tb.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = neg ? Rat(-a[i][j]) : a[i][j];
    tb.t[i][n + i] = 1;
    tb.t[i][tb.vars] = neg ? Rat(-b[i]) : b[i];
    tb.basis[i] = n + i;
  }
  // phase 1: maximize -(sum of artificials), reduced against the basis
  tb.z.assign(tb.vars, Rat(0));
  tb.z0 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tb.z[j] += tb.t[i][j];
    tb.z0 += tb.t[i][tb.vars];
  }
  tb.run();
  if (tb.z0 != 0) return {LpStatus::infeasible, {}, Rat(0)};

  // drive leftover artificials out of the basis, dropping redundant rows
  for (std::size_t i = 0; i < tb.rows;) {
    if (tb.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t pc = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tb.t[i][j] != 0) {
        pc = j;
        break;
      }
    if (pc < n) {
      tb.pivot(i, pc);
      ++i;
    } else {
      tb.t.erase(tb.t.begin() + static_cast<long>(i));
      tb.basis.erase(tb.basis.begin() + static_cast<long>(i));
      --tb.rows;
    }
  }

  // phase 2 on the original variables
  for (auto& row : tb.t) row.erase(row.begin() + static_cast<long>(n), row.end() - 1);
  tb.vars = n;
  tb.z.assign(n, Rat(0));
  tb.z0 = 0;
  for (std::size_t j = 0; j < n; ++j) tb.z[j] = c[j];
  for (std::size_t i = 0; i < tb.rows; ++i) {
    const Rat& cb = c[tb.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < n; ++j) tb.z[j] -= cb * tb.t[i][j];
    tb.z0 -= cb * tb.t[i][n];
  }
  try {
    tb.run();
  } catch (const domain_error&) {
    return {LpStatus::unbounded, {}, Rat(0)};
  }

  LpResult res;
  res.status = LpStatus::optimal;
  res.solution.assign(n, Rat(0));
  Rat value = 0;
  for (std::size_t i = 0; i < tb.rows; ++i) {
    res.solution[tb.basis[i]] = tb.t[i][n];
    value += c[tb.basis[i]] * tb.t[i][n];
  }
  res.value = value;
  return res;
}

}  // namespace helly::exact
