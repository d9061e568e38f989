#include "helly/rank2/gl2.hpp"

#include <algorithm>

#include "helly/detail/combinatorics.hpp"
#include "helly/errors.hpp"
#include "helly/exact/snf.hpp"

namespace helly::rank2 {

Gl2Component Gl2Component::make(FactoredForm form, long det_twist) {
  if (form.degree() == 0 && det_twist == 0)
    throw domain_error("gl2 component: trivial module");
  return {std::move(form), det_twist};
}

Gl2Classification gl2_classify(const std::vector<Gl2Component>& comps) {
  Gl2Classification c;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    long w = comps[i].weight();
    (w > 0 ? c.plus : w < 0 ? c.minus : c.zero).push_back(i);
  }
  return c;
}

Rat mu_slope(const Gl2Component& c, const ProjectiveRoot& l) {
  long w = c.weight();
  if (w == 0) throw domain_error("mu_slope: weight-zero component");
  long d = static_cast<long>(c.form.degree());
  long m = static_cast<long>(multiplicity(c.form, l));
  Rat r(d - 2 * m, w);
  r.canonicalize();
  return r;
}

std::optional<SlopeInterval> gl2_feasible_slopes(
    const std::vector<Gl2Component>& comps, const ProjectiveRoot& l) {
  SlopeInterval iv;
  for (const auto& c : comps) {
    long w = c.weight();
    if (w == 0) {
      if (2 * multiplicity(c.form, l) < c.form.degree()) return std::nullopt;
      continue;
    }
    Rat mu = mu_slope(c, l);
    if (w > 0) {
      if (!iv.lo || mu > *iv.lo) iv.lo = mu;
    } else {
      if (!iv.hi || mu < *iv.hi) iv.hi = mu;
    }
  }
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) return std::nullopt;
  return iv;
}

bool gl2_rules_out(const std::vector<Gl2Component>& comps,
                   const std::vector<std::size_t>& j,
                   const ProjectiveRoot& l) {
  std::optional<Rat> max_plus, min_minus;
  for (std::size_t i : j) {
    if (i >= comps.size()) throw domain_error("gl2_rules_out: bad index");
    const auto& c = comps[i];
    long w = c.weight();
    if (w == 0) {
      if (2 * multiplicity(c.form, l) < c.form.degree()) return true;
      continue;
    }
    Rat mu = mu_slope(c, l);
    if (w > 0) {
      if (!max_plus || mu > *max_plus) max_plus = mu;
    } else {
      if (!min_minus || mu < *min_minus) min_minus = mu;
    }
  }
  return max_plus && min_minus && *max_plus > *min_minus;
}

namespace {

std::vector<FactoredForm> forms_at(const std::vector<Gl2Component>& comps,
                                   const std::vector<std::size_t>& idx) {
  std::vector<FactoredForm> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(comps[i].form);
  return out;
}

std::vector<ProjectiveRoot> positive_degree_roots(
    const std::vector<Gl2Component>& comps) {
  std::vector<FactoredForm> pos;
  for (const auto& c : comps)
    if (c.form.degree() > 0) pos.push_back(c.form);
  if (pos.empty()) return {};
  return distinct_roots(pos);
}

// The tuple is fixed by a nontrivial 1-PS: in some basis every component is a
// monomial, the slopes mu agree off the weight-zero class and the weight-zero
// components are balanced.
bool fixed_by_nontrivial_1ps(const std::vector<Gl2Component>& comps) {
  std::vector<ProjectiveRoot> r = positive_degree_roots(comps);
  if (r.size() > 2) return false;
  std::vector<std::pair<ProjectiveRoot, ProjectiveRoot>> cands;
  if (r.size() == 2) {
    cands = {{r[0], r[1]}, {r[1], r[0]}};
  } else if (r.size() == 1) {
    ProjectiveRoot other = fresh_line(r);
    cands = {{r[0], other}, {other, r[0]}};
  } else {
    return false;  // all degree zero: handled before
  }
  for (const auto& [l1, l2] : cands) {
    bool ok = true;
    std::optional<Rat> q;
    for (const auto& c : comps) {
      if (!c.form.is_monomial_in(l1, l2)) {
        ok = false;
        break;
      }
      if (c.weight() == 0) {
        if (2 * multiplicity(c.form, l1) != c.form.degree()) {
          ok = false;
          break;
        }
      } else {
        Rat mu = mu_slope(c, l1);
        if (q && *q != mu) {
          ok = false;
          break;
        }
        q = mu;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool gl2_orbit_closed(const std::vector<Gl2Component>& comps) {
  if (comps.empty()) throw domain_error("gl2: empty tuple");
  Gl2Classification cls = gl2_classify(comps);
  if (cls.plus.empty() && cls.minus.empty())
    return sl2_orbit_closed(forms_at(comps, cls.zero));
  if (cls.plus.empty() || cls.minus.empty())
    return false;  // the scaling 1-PS escapes
  bool sides_degree_zero = true;
  for (std::size_t i : cls.plus)
    sides_degree_zero &= comps[i].form.degree() == 0;
  for (std::size_t i : cls.minus)
    sides_degree_zero &= comps[i].form.degree() == 0;
  if (sides_degree_zero) {
    if (cls.zero.empty()) return true;
    return sl2_orbit_closed(forms_at(comps, cls.zero));
  }
  // candidate eigenlines: high-multiplicity roots of positive-degree parts
  std::vector<ProjectiveRoot> pool;
  for (const auto& c : comps) {
    if (c.form.degree() == 0) continue;
    for (const auto& root : high_mult_roots(c.form))
      if (std::find(pool.begin(), pool.end(), root) == pool.end())
        pool.push_back(root);
  }
  bool limit_exists = false;
  for (const auto& l : pool)
    if (gl2_feasible_slopes(comps, l)) {
      limit_exists = true;
      break;
    }
  if (!limit_exists) return true;
  return fixed_by_nontrivial_1ps(comps);
}

std::size_t gl2_stabilizer_dimension(const std::vector<Gl2Component>& comps) {
  if (comps.empty()) throw domain_error("gl2: empty tuple");
  std::vector<ProjectiveRoot> r = positive_degree_roots(comps);
  if (r.empty()) return 3;  // SL2 acts trivially, scalars discretely
  if (r.size() >= 3) {
    for (const auto& c : comps)
      if (c.weight() != 0) return 0;
    return 1;  // scalars survive
  }
  // character lattice of the diagonal torus fixing the root lines
  ProjectiveRoot l1 = r[0];
  ProjectiveRoot l2 = r.size() == 2 ? r[1] : fresh_line(r);
  exact::IntMatrix rows(comps.size(), 2);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    long e = comps[i].det_twist;
    long a = static_cast<long>(multiplicity(comps[i].form, l1));
    long b = static_cast<long>(multiplicity(comps[i].form, l2));
    rows.at(i, 0) = e - a;
    rows.at(i, 1) = e - b;
  }
  std::size_t torus_dim = 2 - exact::integer_rank(rows);
  return torus_dim + (r.size() == 1 ? 1 : 0);  // unipotent for a single line
}

std::size_t gl2_orbit_dimension(const std::vector<Gl2Component>& comps) {
  return 4 - gl2_stabilizer_dimension(comps);
}

SelectionReport gl2_select(const std::vector<Gl2Component>& comps) {
  if (!gl2_orbit_closed(comps))
    throw domain_error("gl2_select: orbit not closed");
  SelectionReport rep;
  rep.dim_full = gl2_orbit_dimension(comps);
  for (std::size_t size = 1; size <= comps.size() && size <= 5; ++size) {
    std::vector<std::size_t> pick = detail::first_combination(size);
    do {
      std::vector<Gl2Component> sub;
      sub.reserve(size);
      for (std::size_t i : pick) sub.push_back(comps[i]);
      if (gl2_orbit_closed(sub) && gl2_orbit_dimension(sub) == rep.dim_full) {
        rep.indices = pick;
        rep.closed = true;
        rep.dim_selected = rep.dim_full;
        return rep;
      }
    } while (detail::next_combination(pick, comps.size()));
  }
  throw domain_error("gl2_select: no subset of size <= 5 found");
}

}  // namespace helly::rank2
