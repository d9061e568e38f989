#include "helly/rank2/oracle.hpp"

#include <algorithm>
#include <optional>

#include "helly/errors.hpp"
#include "helly/exact/linear.hpp"

namespace helly::rank2 {

namespace {

using exact::IntMatrix;
using exact::RatVec;

struct Monomial {
  Rat coeff;
  std::size_t x_power = 0;  // exponent of x; y gets degree - x_power
};

// limit component: nullopt = the component converges to zero
using LimitComp = std::optional<Monomial>;

struct Adapted {
  std::vector<FactoredForm> forms;  // transformed tuple
  std::vector<RatVec> coeffs;       // dense expansions
};

Adapted adapt(const std::vector<FactoredForm>& forms, const BasisChange& bc) {
  Adapted a;
  a.forms.reserve(forms.size());
  for (const auto& f : forms) {
    FactoredForm t = substitute(f, bc.ia, bc.ib, bc.ic, bc.id);
    a.coeffs.push_back(expand(t));
    a.forms.push_back(std::move(t));
  }
  return a;
}

std::size_t min_support(const RatVec& c) {
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) return j;
  return c.size();
}

// g * w = h for some g in the (twisted) diagonal stabilizer family; decided
// by the character system on the coefficient ratios.
bool monomial_tuple_in_orbit(const std::vector<FactoredForm>& w,
                             const std::vector<long>& twists, bool full_gl2,
                             const std::vector<LimitComp>& h) {
  const std::size_t n = w.size();
  for (const auto& hc : h)
    if (!hc) return false;  // a zero limit of a nonzero component escapes

  std::vector<FactoredForm> posdeg;
  for (const auto& f : w)
    if (f.degree() > 0) posdeg.push_back(f);
  std::vector<ProjectiveRoot> r = distinct_roots(posdeg);
  if (r.size() > 2) return false;

  std::vector<std::pair<ProjectiveRoot, ProjectiveRoot>> assignments;
  if (r.size() == 2) {
    assignments = {{r[0], r[1]}, {r[1], r[0]}};
  } else if (r.size() == 1) {
    ProjectiveRoot other = fresh_line(r);
    assignments = {{r[0], other}, {other, r[0]}};
  } else {
    assignments = {{root_x, root_y}};
  }

  for (const auto& [l1, l2] : assignments) {
    BasisChange bc = adapt_to_pair(l1, l2);
    bool ok = true;
    std::vector<long> xa(n), yb(n);
    RatVec target(n);
    for (std::size_t i = 0; i < n && ok; ++i) {
      FactoredForm t = substitute(w[i], bc.ia, bc.ib, bc.ic, bc.id);
      std::size_t a = multiplicity(t, root_x);
      std::size_t b = multiplicity(t, root_y);
      std::size_t d = t.degree();
      if (a + b != d) {
        ok = false;  // not a monomial in this basis
        break;
      }
      if (a != h[i]->x_power) {
        ok = false;  // exponent pattern mismatch
        break;
      }
      xa[i] = static_cast<long>(a);
      yb[i] = static_cast<long>(b);
      target[i] = h[i]->coeff / t.coeff;
    }
    if (!ok) continue;

    // characters of the allowed diagonal family acting on each coefficient
    const std::size_t cols = full_gl2 ? 2 : 1;
    IntMatrix e(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
      if (full_gl2) {
        e.at(i, 0) = twists[i] - xa[i];
        e.at(i, 1) = twists[i] - yb[i];
      } else {
        e.at(i, 0) = yb[i] - xa[i];
      }
    }
    auto sol = exact::solve_integer_linear(e.transposed(),
                                           exact::IntVec(cols, Int(0)));
    bool solvable = true;
    for (const auto& m : sol->kernel) {
      Rat prod = 1;
      for (std::size_t i = 0; i < n; ++i)
        prod *= exact::pow_rat(target[i], m[i].get_si());
      if (prod != 1) {
        solvable = false;
        break;
      }
    }
    if (solvable) return true;
  }
  return false;
}

// Exact limit of the adapted tuple along the 1-PS with eigenline x and the
// given slope; nullopt when the limit does not exist.
std::optional<std::vector<LimitComp>> limit_at(const Adapted& a,
                                               const std::vector<long>& wt,
                                               const Rat& q) {
  std::vector<LimitComp> out(a.forms.size());
  for (std::size_t i = 0; i < a.forms.size(); ++i) {
    const RatVec& c = a.coeffs[i];
    long d = static_cast<long>(c.size()) - 1;
    LimitComp kept;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      Rat value = q * wt[i] + Rat(2 * static_cast<long>(j) - d);
      if (value < 0) return std::nullopt;
      if (value == 0) kept = Monomial{c[j], j};
    }
    out[i] = kept;
  }
  return out;
}

std::vector<ProjectiveRoot> eigenline_pool(
    const std::vector<FactoredForm>& forms) {
  std::vector<FactoredForm> posdeg;
  for (const auto& f : forms)
    if (f.degree() > 0) posdeg.push_back(f);
  std::vector<ProjectiveRoot> pool = distinct_roots(posdeg);
  ProjectiveRoot f1 = fresh_line(pool);
  pool.push_back(f1);
  pool.push_back(fresh_line(pool));
  return pool;
}

// Candidate slopes: every exponent-vanishing locus inside the feasible
// window plus one generic sample per regime.
std::vector<Rat> slope_candidates(const Adapted& a,
                                  const std::vector<long>& wt) {
  std::optional<Rat> lo, hi;
  std::vector<Rat> critical;
  for (std::size_t i = 0; i < a.forms.size(); ++i) {
    const RatVec& c = a.coeffs[i];
    long d = static_cast<long>(c.size()) - 1;
    std::size_t ms = min_support(c);
    if (wt[i] == 0) {
      if (2 * static_cast<long>(ms) < d) return {};
      continue;
    }
    Rat bound(d - 2 * static_cast<long>(ms), wt[i]);
    bound.canonicalize();
    if (wt[i] > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
    for (std::size_t j = ms; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      Rat v(d - 2 * static_cast<long>(j), wt[i]);
      v.canonicalize();
      critical.push_back(v);
    }
  }
  if (lo && hi && *lo > *hi) return {};

  std::vector<Rat> cand;
  for (const Rat& v : critical) {
    if (lo && v < *lo) continue;
    if (hi && v > *hi) continue;
    cand.push_back(v);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Rat> out = cand;
  if (cand.empty()) {
    out.push_back(lo ? *lo : (hi ? *hi : Rat(0)));
  } else {
    if (!lo) out.push_back(cand.front() - 1);
    if (!hi) out.push_back(cand.back() + 1);
    for (std::size_t i = 0; i + 1 < cand.size(); ++i)
      out.push_back((cand[i] + cand[i + 1]) / 2);
    if (lo && *lo < cand.front()) out.push_back((*lo + cand.front()) / 2);
    if (hi && *hi > cand.back()) out.push_back((cand.back() + *hi) / 2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // clamp to the feasible window
  std::vector<Rat> res;
  for (const Rat& v : out) {
    if (lo && v < *lo) continue;
    if (hi && v > *hi) continue;
    res.push_back(v);
  }
  return res;
}

OracleVerdict closed_by_limits(const std::vector<FactoredForm>& forms,
                               const std::vector<long>& twists,
                               bool full_gl2) {
  for (const auto& l : eigenline_pool(forms)) {
    BasisChange bc = adapt_to_line(l);
    Adapted a = adapt(forms, bc);
    std::vector<long> wt(forms.size(), 0);
    if (full_gl2)
      for (std::size_t i = 0; i < forms.size(); ++i)
        wt[i] = 2 * twists[i] - static_cast<long>(forms[i].degree());
    if (full_gl2) {
      for (const Rat& q : slope_candidates(a, wt)) {
        auto h = limit_at(a, wt, q);
        if (!h) continue;
        if (!monomial_tuple_in_orbit(a.forms, twists, true, *h))
          return {false, OnePSSpec{l, q}, 0};
      }
    } else {
      // inside SL2 the slope is zero
      auto h = limit_at(a, wt, Rat(0));
      if (h && !monomial_tuple_in_orbit(a.forms, twists, false, *h))
        return {false, OnePSSpec{l, Rat(0)}, 0};
    }
  }
  return {true, std::nullopt, 0};
}

}  // namespace

OracleVerdict oracle_sl2_verdict(const std::vector<FactoredForm>& forms) {
  if (forms.empty()) throw domain_error("oracle: empty tuple");
  for (const auto& f : forms)
    if (f.degree() == 0) throw domain_error("oracle: degree-zero component");
  return closed_by_limits(forms, std::vector<long>(forms.size(), 0), false);
}

OracleVerdict oracle_gl2_verdict(const std::vector<Gl2Component>& comps) {
  if (comps.empty()) throw domain_error("oracle: empty tuple");
  // scaling one-parameter subgroups (no eigenline): one-sided tuples escape
  bool has_plus = false, has_minus = false;
  for (const auto& c : comps) {
    if (c.weight() > 0) has_plus = true;
    if (c.weight() < 0) has_minus = true;
  }
  if (has_plus != has_minus) return {false, std::nullopt, has_plus ? 1 : -1};
  std::vector<FactoredForm> forms;
  std::vector<long> twists;
  for (const auto& c : comps) {
    forms.push_back(c.form);
    twists.push_back(c.det_twist);
  }
  return closed_by_limits(forms, twists, true);
}

bool oracle_sl2_closed(const std::vector<FactoredForm>& forms) {
  return oracle_sl2_verdict(forms).closed;
}

bool oracle_gl2_closed(const std::vector<Gl2Component>& comps) {
  return oracle_gl2_verdict(comps).closed;
}

}  // namespace helly::rank2
