#include "helly/rank2/forms.hpp"

#include <algorithm>
#include <map>

#include "helly/errors.hpp"

namespace helly::rank2 {

ProjectiveRoot ProjectiveRoot::make(Int p, Int q) {
  if (p == 0 && q == 0) throw domain_error("projective root: (0,0)");
  Int g = exact::gcd(abs(p), abs(q));
  p /= g;
  q /= g;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return {std::move(p), std::move(q)};
}

FactoredForm FactoredForm::make(
    Rat coeff, std::vector<std::pair<ProjectiveRoot, std::size_t>> roots) {
  if (coeff == 0) throw domain_error("factored form: zero coefficient");
  std::map<ProjectiveRoot, std::size_t> merged;
  for (auto& [r, m] : roots) {
    if (m == 0) throw domain_error("factored form: zero multiplicity");
    ProjectiveRoot n = ProjectiveRoot::make(r.p, r.q);
    merged[n] += m;
  }
  FactoredForm f;
  f.coeff = std::move(coeff);
  f.roots.assign(merged.begin(), merged.end());
  return f;
}

std::size_t FactoredForm::degree() const {
  std::size_t d = 0;
  for (const auto& [r, m] : roots) d += m;
  return d;
}

bool FactoredForm::is_monomial_in(const ProjectiveRoot& a,
                                  const ProjectiveRoot& b) const {
  for (const auto& [r, m] : roots)
    if (!(r == a) && !(r == b)) return false;
  return true;
}

FactoredForm form_of(
    Rat coeff,
    std::vector<std::pair<std::pair<long, long>, std::size_t>> root_powers) {
  std::vector<std::pair<ProjectiveRoot, std::size_t>> roots;
  for (auto& [pq, m] : root_powers)
    roots.emplace_back(ProjectiveRoot::make(pq.first, pq.second), m);
  return FactoredForm::make(std::move(coeff), std::move(roots));
}

std::size_t multiplicity(const FactoredForm& f, const ProjectiveRoot& l) {
  for (const auto& [r, m] : f.roots)
    if (r == l) return m;
  return 0;
}

std::vector<ProjectiveRoot> high_mult_roots(const FactoredForm& f) {
  const std::size_t d = f.degree();
  if (d == 0) throw domain_error("high_mult_roots: degree-zero form");
  std::vector<ProjectiveRoot> out;
  for (const auto& [r, m] : f.roots)
    if (2 * m >= d) out.push_back(r);
  return out;
}

std::vector<ProjectiveRoot> common_high_root(
    const std::vector<FactoredForm>& forms) {
  if (forms.empty()) throw domain_error("common_high_root: empty tuple");
  std::vector<ProjectiveRoot> acc = high_mult_roots(forms[0]);
  for (std::size_t i = 1; i < forms.size() && !acc.empty(); ++i) {
    std::vector<ProjectiveRoot> next = high_mult_roots(forms[i]);
    std::vector<ProjectiveRoot> keep;
    for (const auto& r : acc)
      if (std::find(next.begin(), next.end(), r) != next.end())
        keep.push_back(r);
    acc = std::move(keep);
  }
  return acc;
}

exact::RatVec expand(const FactoredForm& f) {
  exact::RatVec c{f.coeff};
  for (const auto& [r, m] : f.roots)
    for (std::size_t k = 0; k < m; ++k) {
      // multiply by (p x + q y): c'_j = p c_{j-1} + q c_j
      exact::RatVec n(c.size() + 1, Rat(0));
      for (std::size_t j = 0; j < c.size(); ++j) {
        n[j + 1] += Rat(r.p) * c[j];
        n[j] += Rat(r.q) * c[j];
      }
      c = std::move(n);
    }
  return c;
}

FactoredForm substitute(const FactoredForm& f, const Rat& a, const Rat& b,
                        const Rat& c, const Rat& d) {
  // L = (p, q) becomes (p a + q c) x + (p b + q d) y, rescaled to a
  // primitive root with the scalar folded into the coefficient
  FactoredForm out;
  out.coeff = f.coeff;
  std::map<ProjectiveRoot, std::size_t> merged;
  for (const auto& [r, m] : f.roots) {
    Rat np = Rat(r.p) * a + Rat(r.q) * c;
    Rat nq = Rat(r.p) * b + Rat(r.q) * d;
    if (np == 0 && nq == 0)
      throw domain_error("substitute: singular basis change");
    // primitive integer pair proportional to (np, nq)
    Int den = exact::lcm(np.get_den(), nq.get_den());
    Int ip = Rat(np * den).get_num();
    Int iq = Rat(nq * den).get_num();
    ProjectiveRoot nr = ProjectiveRoot::make(ip, iq);
    // scale s with (ip, iq) = s * (nr.p, nr.q); fold s/den per power
    Rat s = nr.p != 0 ? Rat(ip) / Rat(nr.p) : Rat(iq) / Rat(nr.q);
    Rat scale = s / Rat(den);
    out.coeff *= exact::pow_rat(scale, static_cast<long>(m));
    merged[nr] += m;
  }
  out.roots.assign(merged.begin(), merged.end());
  return out;
}

BasisChange adapt_to_line(const ProjectiveRoot& l1) {
  // second line: anything independent of l1
  ProjectiveRoot l2 = fresh_line({l1});
  return adapt_to_pair(l1, l2);
}

BasisChange adapt_to_pair(const ProjectiveRoot& l1, const ProjectiveRoot& l2) {
  if (l1 == l2) throw domain_error("adapt_to_pair: equal lines");
  // columns of g^{-1}: u with l1(u) = 1, v spanning ker(l1) with l2(v) != 0,
  // then v scaled so det = 1; l1 o g^{-1} = x and l2 o g^{-1} ~ y.
  // ker l2 direction for u so that l2(u) = 0: u = (l2.q, -l2.p) scaled.
  Rat u1(l2.q), u2(-l2.p);
  Rat l1u = Rat(l1.p) * u1 + Rat(l1.q) * u2;
  if (l1u == 0) throw domain_error("adapt_to_pair: dependent lines");
  u1 /= l1u;
  u2 /= l1u;
  Rat v1(l1.q), v2(-l1.p);  // ker l1
  Rat det = u1 * v2 - u2 * v1;
  v1 /= det;
  v2 /= det;
  return {u1, v1, u2, v2};
}

std::vector<ProjectiveRoot> distinct_roots(
    const std::vector<FactoredForm>& forms) {
  std::vector<ProjectiveRoot> out;
  for (const auto& f : forms)
    for (const auto& [r, m] : f.roots)
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

ProjectiveRoot fresh_line(const std::vector<ProjectiveRoot>& avoid) {
  for (long k = 0;; ++k) {
    ProjectiveRoot cand =
        k == 0 ? root_x : (k == 1 ? root_y : ProjectiveRoot::make(1, k - 1));
    if (std::find(avoid.begin(), avoid.end(), cand) == avoid.end())
      return cand;
  }
}

}  // namespace helly::rank2
