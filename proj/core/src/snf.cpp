#include "helly/exact/snf.hpp"

#include <cstdlib>

namespace helly::exact {

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

// rows i <- p*row_i + q*row_j, row_j <- -bg*row_i + ag*row_j (det 1 block)
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Int& p,
                  const Int& q, const Int& ag, const Int& bg) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Int mi = m.at(i, c), mj = m.at(j, c);
    m.at(i, c) = p * mi + q * mj;
    m.at(j, c) = ag * mj - bg * mi;
  }
}

void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const Int& p,
                  const Int& q, const Int& ag, const Int& bg) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int mi = m.at(r, i), mj = m.at(r, j);
    m.at(r, i) = p * mi + q * mj;
    m.at(r, j) = ag * mj - bg * mi;
  }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& s = r.s;
  const std::size_t dim = m < n ? m : n;

  for (std::size_t t = 0; t < dim; ++t) {
    // locate a pivot of minimal absolute value in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& v = s.at(i, j);
        if (v == 0) continue;
        Int av = abs(v);
        if (!found || av < best) {
          found = true;
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    if (pi != t) {
      swap_rows(s, t, pi);
      swap_rows(r.u, t, pi);
    }
    if (pj != t) {
      swap_cols(s, t, pj);
      swap_cols(r.v, t, pj);
    }

    for (;;) {
      // clear the pivot column
      bool touched = true;
      while (touched) {
        touched = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (s.at(i, t) == 0) continue;
          Int aa = s.at(t, t), bb = s.at(i, t);
          if (aa != 0 && bb % aa == 0) {
            Int q = bb / aa;
            for (std::size_t c = 0; c < n; ++c) s.at(i, c) -= q * s.at(t, c);
            for (std::size_t c = 0; c < m; ++c)
              r.u.at(i, c) -= q * r.u.at(t, c);
          } else {
            Int p, q;
            Int g = ext_gcd(aa, bb, p, q);
            combine_rows(s, t, i, p, q, aa / g, bb / g);
            combine_rows(r.u, t, i, p, q, aa / g, bb / g);
          }
        }
        // clear the pivot row; may dirty the column again
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s.at(t, j) == 0) continue;
          Int aa = s.at(t, t), bb = s.at(t, j);
          if (aa != 0 && bb % aa == 0) {
            Int q = bb / aa;
            for (std::size_t rr = 0; rr < m; ++rr)
              s.at(rr, j) -= q * s.at(rr, t);
            for (std::size_t rr = 0; rr < n; ++rr)
              r.v.at(rr, j) -= q * r.v.at(rr, t);
          } else {
            Int p, q;
            Int g = ext_gcd(aa, bb, p, q);
            combine_cols(s, t, j, p, q, aa / g, bb / g);
            combine_cols(r.v, t, j, p, q, aa / g, bb / g);
          }
          touched = true;
        }
      }
      // pivot must divide the whole trailing block for the divisor chain
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            for (std::size_t c = 0; c < n; ++c) s.at(t, c) += s.at(i, c);
            for (std::size_t c = 0; c < m; ++c)
              r.u.at(t, c) += r.u.at(i, c);
            fixed = true;
          }
      if (!fixed) break;
    }
  }

  for (std::size_t t = 0; t < dim; ++t)
    if (s.at(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) s.at(t, c) = -s.at(t, c);
      for (std::size_t c = 0; c < m; ++c) r.u.at(t, c) = -r.u.at(t, c);
    }
  return r;
}

std::size_t integer_rank(const IntMatrix& a) {
  SnfResult r = smith_normal_form(a);
  std::size_t dim = a.rows() < a.cols() ? a.rows() : a.cols();
  std::size_t rank = 0;
  for (std::size_t t = 0; t < dim; ++t)
    if (r.s.at(t, t) != 0) ++rank;
  return rank;
}

}  // namespace helly::exact
